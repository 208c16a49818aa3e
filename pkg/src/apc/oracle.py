"""Exhaustive ground truth for small graphs, by pruned backtracking."""

from __future__ import annotations

import os
from dataclasses import dataclass

from apc.errors import BudgetExceeded, OddOrder
from apc.graph import BLUE, RED, ColoredGraph, CycleSeq

DEFAULT_MAX_VERTICES = 14


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_cycles: int | None = None

    def __post_init__(self):
        if self.max_vertices <= 0 or (self.max_cycles is not None and self.max_cycles <= 0):
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_env(cls) -> "EnumerationBudget":
        raw = os.environ.get("APC_BUDGET")
        return cls(int(raw)) if raw else cls()

    def check(self, g: ColoredGraph) -> None:
        if g.vertex_count > self.max_vertices:
            raise BudgetExceeded(f"{g.vertex_count} vertices exceeds the oracle budget of {self.max_vertices}")


def _adjacency(g: ColoredGraph) -> dict:
    return {c: [g.neighbors(v, c) for v in range(g.vertex_count)] for c in (RED, BLUE)}


def enumerate_alternating_cycles(g: ColoredGraph, budget: EnumerationBudget | None = None) -> set[tuple[int, ...]]:
    """All alternating cycles of ``g`` in canonical form.

    Each cycle is grown from its smallest vertex only, and kept in the
    orientation whose second vertex is smaller than its last.
    """
    budget = budget or EnumerationBudget()
    budget.check(g)
    adj = _adjacency(g)
    other = {RED: BLUE, BLUE: RED}
    found: set[tuple[int, ...]] = set()
    cap = budget.max_cycles

    def extend(root, path, used, first, last):
        u = path[-1]
        nxt = other[last]
        for w in adj[nxt][u]:
            if w == root:
                if nxt is not first and len(path) >= 4 and path[1] < path[-1]:
                    found.add(tuple(path))
                    if cap is not None and len(found) > cap:
                        raise BudgetExceeded(f"more than {cap} alternating cycles")
            elif w > root and not used >> w & 1:
                path.append(w)
                extend(root, path, used | 1 << w, first, nxt)
                path.pop()

    for root in range(g.vertex_count):
        for first in (RED, BLUE):
            for w in adj[first][root]:
                if w > root:
                    extend(root, [root, w], 1 << root | 1 << w, first, first)
    return found


def find_cycle_through(g: ColoredGraph, v: int, length: int) -> tuple[int, ...] | None:
    """Some alternating cycle of exactly ``length`` through ``v``, or None."""
    if length < 4 or length % 2 or length > g.vertex_count:
        return None
    adj = _adjacency(g)
    other = {RED: BLUE, BLUE: RED}

    def extend(path, used, first, last):
        u = path[-1]
        nxt = other[last]
        if len(path) == length:
            return tuple(path) if nxt is not first and g.color(u, v) is nxt else None
        for w in adj[nxt][u]:
            if not used >> w & 1:
                path.append(w)
                hit = extend(path, used | 1 << w, first, nxt)
                if hit:
                    return hit
                path.pop()
        return None

    for first in (RED, BLUE):
        for w in adj[first][v]:
            hit = extend([v, w], 1 << v | 1 << w, first, first)
            if hit:
                return hit
    return None


def realizable_pairs(g: ColoredGraph, budget: EnumerationBudget | None = None) -> set[tuple[int, int]]:
    """Exactly the ``(vertex, length)`` pairs lying on some alternating cycle.

    Every pair is decided by exhaustive search; a hit marks all vertices of
    the cycle found, so only missing pairs pay for a full search.
    """
    budget = budget or EnumerationBudget()
    budget.check(g)
    n = g.vertex_count
    covered: set[tuple[int, int]] = set()
    for L in range(4, n + 1, 2):
        for v in range(n):
            if (v, L) in covered:
                continue
            hit = find_cycle_through(g, v, L)
            if hit:
                covered.update((u, L) for u in hit)
    return covered


@dataclass
class PancyclicityReport:
    pancyclic: bool
    missing: list[tuple[int, int]]
    realized: set[tuple[int, int]]


def brute_vertex_pancyclic(g: ColoredGraph, budget: EnumerationBudget | None = None) -> PancyclicityReport:
    budget = budget or EnumerationBudget()
    budget.check(g)
    n = g.vertex_count
    if n % 2:
        raise OddOrder(f"vertex alternating-pancyclicity needs even order, got {n}")
    realized = realizable_pairs(g, budget)
    required = [(v, L) for v in range(n) for L in range(4, n + 1, 2)]
    missing = [p for p in required if p not in realized]
    return PancyclicityReport(not missing, missing, realized)


def find_hamiltonian_alternating(g: ColoredGraph, budget: EnumerationBudget | None = None) -> CycleSeq | None:
    budget = budget or EnumerationBudget()
    budget.check(g)
    if g.vertex_count == 0:
        return None
    hit = find_cycle_through(g, 0, g.vertex_count)
    return CycleSeq.verified(g, hit) if hit else None
