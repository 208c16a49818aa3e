"""Structural predicates on colored generalized sums.

Good pairs and good cycles, parallel classes, singular vertices, exterior
color degrees, and a consistency report for sums without good pairs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

from apc.cgs import CgsInstance
from apc.errors import (
    GoodPairPresent,
    HypothesisViolated,
    IndexOutOfRange,
    VertexInTarget,
    ViolationKind,
)
from apc.graph import BLUE, RED, ColoredGraph, CycleSeq, EdgeColor, canonical_cycle, cycle_neighbor, edge_key


@dataclass(frozen=True)
class GoodPair:
    """Exterior edges ``e1 = (v, w)`` and ``e2 = (v', w')`` with ``v, v'`` on
    the first cycle. ``witness`` is the monochromatic 4-cycle ``v v' w' w``."""

    e1: tuple[int, int]
    e2: tuple[int, int]
    witness: tuple[int, int, int, int]
    color: EdgeColor

    @property
    def key(self) -> tuple:
        return tuple(sorted((edge_key(*self.e1), edge_key(*self.e2))))


@dataclass(frozen=True)
class ParallelClass:
    edges: tuple[tuple[int, int, EdgeColor], ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def key(self) -> frozenset:
        return frozenset(edge_key(u, v) for u, v, _ in self.edges)

    def count(self, color: EdgeColor) -> int:
        return sum(1 for _, _, c in self.edges if c is color)


@dataclass(frozen=True)
class DegreePair:
    d_r: int
    d_b: int

    def swapped(self) -> "DegreePair":
        return DegreePair(self.d_b, self.d_r)


# -- good pairs and good cycles ---------------------------------------------


def good_pairs_between(g: ColoredGraph, c1: CycleSeq, c2: CycleSeq) -> list[GoodPair]:
    """All good pairs between two vertex-disjoint alternating cycles of ``g``."""
    found: dict[tuple, GoodPair] = {}
    for v in c1:
        for w in c2:
            col = g.color(v, w)
            if col is None:
                continue
            v2, w2 = cycle_neighbor(c1, v, col), cycle_neighbor(c2, w, col)
            if g.color(v2, w2) is col:
                gp = GoodPair((v, w), (v2, w2), (v, v2, w2, w), col)
                found.setdefault(gp.key, gp)
    return sorted(found.values(), key=lambda gp: gp.key)


def find_good_pairs(inst: CgsInstance, i: int, j: int) -> list[GoodPair]:
    if i == j:
        raise IndexOutOfRange("good pairs need two different summands")
    return good_pairs_between(inst.graph, inst.cycle(i), inst.cycle(j))


def find_good_cycles(inst: CgsInstance) -> list[tuple[int, int, int, int]]:
    """Monochromatic 4-cycles with a pair of opposite exterior edges.

    Cycles made entirely of exterior edges are not reported: between two
    summands they never correspond to a good pair and they occur in every
    sum satisfying the pancyclicity hypotheses.
    """
    g = inst.graph
    ext = inst.exterior
    seen: set[tuple[int, ...]] = set()
    for (a, b), col in ext.items():
        for a2 in g.neighbors(a, col):
            if a2 == b:
                continue
            for b2 in g.neighbors(b, col):
                if b2 in (a, a2):
                    continue
                if g.color(a2, b2) is not col or edge_key(a2, b2) not in ext:
                    continue
                if edge_key(b, b2) in ext and edge_key(a, a2) in ext:
                    continue
                seen.add(canonical_cycle((a, b, b2, a2)))
    return sorted(seen)


# -- parallel classes -------------------------------------------------------


def _orbit(g: ColoredGraph, c1: CycleSeq, c2: CycleSeq, u: int, v: int) -> ParallelClass:
    col = g.color(u, v)
    edges = []
    cu, cv = u, v
    while True:
        edges.append((cu, cv, col))
        nu, nv = cycle_neighbor(c1, cu, col), cycle_neighbor(c2, cv, col)
        actual = g.color(nu, nv)
        if actual is col:
            raise GoodPairPresent(
                f"edges ({cu}, {cv}) and ({nu}, {nv}) form a good pair",
                GoodPair((cu, cv), (nu, nv), (cu, nu, nv, cv), col),
            )
        cu, cv, col = nu, nv, actual
        if (cu, cv) == (u, v):
            return ParallelClass(tuple(edges))


def parallel_class(inst: CgsInstance, e: tuple[int, int]) -> ParallelClass:
    u, v = e
    i, j = inst.summand_of(u), inst.summand_of(v)
    if i == j:
        raise IndexOutOfRange(f"({u}, {v}) is not an exterior edge")
    return _orbit(inst.graph, inst.cycle(i), inst.cycle(j), u, v)


def parallel_partition(inst: CgsInstance, i: int = 0, j: int = 1) -> list[ParallelClass]:
    if i == j:
        raise IndexOutOfRange("a partition needs two different summands")
    c1, c2 = inst.cycle(i), inst.cycle(j)
    covered: set[tuple[int, int]] = set()
    classes = []
    for u in c1.vertices:
        for v in c2.vertices:
            if edge_key(u, v) in covered:
                continue
            cls = _orbit(inst.graph, c1, c2, u, v)
            covered |= cls.key
            classes.append(cls)
    return classes


# -- singular vertices and degrees -----------------------------------------


def singular_wrt(g: ColoredGraph, vertices: Iterable[int], targets: Iterable[int]) -> list[tuple[int, EdgeColor]]:
    """Vertices whose edges into ``targets`` exist and share one color."""
    targets = list(targets)
    out = []
    for v in vertices:
        colors = {g.color(v, w) for w in targets} - {None}
        if len(colors) == 1:
            out.append((v, colors.pop()))
    return out


def singular_vertices(inst: CgsInstance, i: int, j: int) -> list[tuple[int, EdgeColor]]:
    if i == j:
        raise IndexOutOfRange("singularity is relative to another summand")
    return singular_wrt(inst.graph, inst.cycle(i).vertices, inst.cycle(j).vertices)


def first_singular_side(inst: CgsInstance):
    """First ordered pair ``(i, j)`` where every vertex of ``C_i`` is singular
    with respect to ``C_j``, with a witness; ``None`` if there is none."""
    for i, j in itertools.permutations(range(inst.k), 2):
        sing = singular_vertices(inst, i, j)
        if len(sing) == len(inst.summands[i]):
            return i, j, sing[0]
    return None


def color_degrees(inst: CgsInstance, v: int, j: int) -> DegreePair:
    target = inst.cycle(j)
    if v in target:
        raise VertexInTarget(f"vertex {v} belongs to summand {j}")
    g = inst.graph
    d_r = sum(1 for w in target if g.color(v, w) is RED)
    d_b = sum(1 for w in target if g.color(v, w) is BLUE)
    return DegreePair(d_r, d_b)


# -- hypotheses -------------------------------------------------------------


def hypothesis_violations(inst: CgsInstance) -> list[HypothesisViolated]:
    """Every reason the instance fails the pancyclicity hypotheses."""
    out = []
    for i, j in itertools.combinations(range(inst.k), 2):
        for gp in find_good_pairs(inst, i, j):
            out.append(HypothesisViolated(ViolationKind.GOOD_PAIR, gp, describe_good_pair(inst, gp)))
    for cyc in find_good_cycles(inst):
        out.append(HypothesisViolated(ViolationKind.GOOD_CYCLE, cyc, " ".join(inst.name(v) for v in cyc)))
    for i, j in itertools.permutations(range(inst.k), 2):
        sing = singular_vertices(inst, i, j)
        if len(sing) == len(inst.summands[i]):
            v, col = sing[0]
            out.append(
                HypothesisViolated(
                    ViolationKind.SINGULAR_SIDE,
                    (v, col),
                    f"every vertex of summand {i} is singular w.r.t. summand {j}, e.g. {inst.name(v)} ({col.value})",
                )
            )
    return out


def check_hypotheses(inst: CgsInstance) -> None:
    """Raise the first :class:`HypothesisViolated` found, if any."""
    problems = hypothesis_violations(inst)
    if problems:
        raise problems[0]


def describe_good_pair(inst: CgsInstance, gp: GoodPair) -> str:
    (a, b), (c, d) = gp.e1, gp.e2
    return f"{inst.name(a)}{inst.name(b)}, {inst.name(c)}{inst.name(d)} ({gp.color.value})"


# -- consistency report -----------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ConsistencyReport:
    summands: tuple[int, int]
    checks: list[Check] = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_dict(self) -> dict:
        return {
            "summands": list(self.summands),
            "passed": self.passed,
            "counts": self.counts,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def verify_lemma4(inst: CgsInstance, i: int = 0, j: int = 1) -> ConsistencyReport:
    """Check the counting consequences of having no good pair between
    ``C_i`` and ``C_j``: color balance, per-class incidence and the degree
    relations between cycle neighbours."""
    classes = parallel_partition(inst, i, j)
    c1, c2 = inst.cycle(i), inst.cycle(j)
    n, m = len(c1) // 2, len(c2) // 2
    l = math.lcm(n, m)
    report = ConsistencyReport((i, j))

    ext = inst.exterior_between(i, j)
    red = sum(1 for c in ext.values() if c is RED)
    blue = len(ext) - red
    report.counts = {"exterior": len(ext), "red": red, "blue": blue, "classes": len(classes), "class_size": 2 * l}
    report.add("red exterior edges = 2mn", red == 2 * m * n, f"{red} vs {2 * m * n}")
    report.add("blue exterior edges = 2mn", blue == 2 * m * n, f"{blue} vs {2 * m * n}")
    report.add(
        "class sizes = 2 lcm(n, m), balanced colors",
        all(len(p) == 2 * l and p.count(RED) == l for p in classes),
        f"{sorted({len(p) for p in classes})}",
    )

    incidence_ok = mono_ok = parity_ok = True
    for p in classes:
        for cyc, side, expected in ((c1, 0, l // n), (c2, 1, l // m)):
            seen: dict[int, list[EdgeColor]] = {}
            for e in p.edges:
                seen.setdefault(e[side], []).append(e[2])
            base = None
            for v in cyc.vertices:
                cols = seen.get(v, [])
                if len(cols) != expected:
                    incidence_ok = False
                if len(set(cols)) != 1:
                    mono_ok = False
                    continue
                col = cols[0]
                if base is None:
                    base = (cyc.position(v) % 2, col)
                elif (cyc.position(v) % 2 == base[0]) != (col is base[1]):
                    parity_ok = False
    report.add("per-class incidence lcm/n and lcm/m", incidence_ok, f"expected {l // n} / {l // m}")
    report.add("per-class edges at a vertex colored alike", mono_ok)
    report.add("alike iff congruent mod 2", parity_ok)

    swap_ok = rule_ok = True
    for cyc, other in ((c1, j), (c2, i)):
        size = len(inst.cycle(other))
        degs = {v: color_degrees(inst, v, other) for v in cyc}
        for w in cyc:
            for x in (cycle_neighbor(cyc, w, RED), cycle_neighbor(cyc, w, BLUE)):
                if degs[x] != degs[w].swapped():
                    swap_ok = False
            for x in cyc:
                same = cyc.position(w) % 2 == cyc.position(x) % 2
                want = degs[w].d_r if same else size - degs[w].d_r
                if degs[x].d_r != want:
                    rule_ok = False
    report.add("cycle neighbours swap red/blue degrees", swap_ok)
    report.add("red degree parity rule", rule_ok)
    return report
