"""Colored generalized sums of Hamiltonian alternating summands."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from apc.errors import (
    BadSize,
    DuplicateEdge,
    GenerationFailed,
    IndexOutOfRange,
    InstanceError,
    MissingExteriorEdge,
    NonAlternatingHamCycle,
    OverlappingSummands,
    TooFewSummands,
)
from apc.graph import BLUE, RED, ColoredGraph, CycleSeq, EdgeColor, cycle_neighbor, edge_key, is_alternating_cycle

DEFAULT_RETRIES = 64


@dataclass(frozen=True)
class Summand:
    """One summand: its vertices (global ids), a Hamiltonian alternating
    cycle through them, and its interior edges (cycle edges plus any chords).
    """

    vertices: tuple[int, ...]
    cycle: tuple[int, ...]
    edges: Mapping[tuple[int, int], EdgeColor] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        table = {}
        for (u, v), c in dict(self.edges).items():
            key = edge_key(u, v)
            if key in table:
                raise DuplicateEdge(f"interior edge {key} given twice")
            table[key] = EdgeColor(c)
        object.__setattr__(self, "edges", MappingProxyType(table))

    @classmethod
    def from_cycle(cls, cycle: Sequence[int], first: EdgeColor = RED) -> "Summand":
        """Chordless summand: just an alternating cycle whose first edge has color ``first``."""
        cycle = tuple(cycle)
        n = len(cycle)
        col = first
        edges = {}
        for i in range(n):
            edges[edge_key(cycle[i], cycle[(i + 1) % n])] = col
            col = col.other()
        return cls(tuple(sorted(cycle)), cycle, edges)

    def __len__(self) -> int:
        return len(self.vertices)


class CgsInstance:
    """A validated colored generalized sum. Build through :func:`build_cgs`."""

    def __init__(self, summands: tuple[Summand, ...], exterior: Mapping, names: tuple[str, ...]):
        self.summands = summands
        self.exterior = MappingProxyType(dict(exterior))
        self.names = names
        self._owner = {v: i for i, s in enumerate(summands) for v in s.vertices}

    @property
    def k(self) -> int:
        return len(self.summands)

    @property
    def vertex_count(self) -> int:
        return len(self._owner)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.summands)

    @cached_property
    def graph(self) -> ColoredGraph:
        edges = dict(self.exterior)
        for s in self.summands:
            edges.update(s.edges)
        return ColoredGraph(self.vertex_count, edges)

    def flatten(self) -> ColoredGraph:
        return self.graph

    @cached_property
    def cycles(self) -> tuple[CycleSeq, ...]:
        return tuple(CycleSeq.verified(self.graph, s.cycle) for s in self.summands)

    def cycle(self, i: int) -> CycleSeq:
        self._check_index(i)
        return self.cycles[i]

    def summand_of(self, v: int) -> int:
        try:
            return self._owner[v]
        except KeyError:
            raise IndexOutOfRange(f"unknown vertex {v}") from None

    def is_exterior(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.exterior

    def exterior_between(self, i: int, j: int) -> dict[tuple[int, int], EdgeColor]:
        self._check_index(i)
        self._check_index(j)
        a, b = set(self.summands[i].vertices), set(self.summands[j].vertices)
        return {
            e: c
            for e, c in self.exterior.items()
            if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a)
        }

    def name(self, v: int) -> str:
        return self.names[v]

    def vertex_by_name(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise IndexOutOfRange(f"unknown vertex {name!r}") from None

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.k:
            raise IndexOutOfRange(f"summand index {i} out of range [0, {self.k})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CgsInstance):
            return NotImplemented
        return (
            self.summands == other.summands
            and dict(self.exterior) == dict(other.exterior)
            and self.names == other.names
        )

    def __hash__(self) -> int:
        return hash((self.summands, frozenset(self.exterior.items())))

    def __repr__(self) -> str:
        return f"CgsInstance(sizes={self.sizes}, exterior={len(self.exterior)})"


def default_names(sizes: Sequence[int]) -> tuple[str, ...]:
    k = len(sizes)
    if k <= 3:
        prefixes = "xyz"[:k]
    elif k <= 26:
        prefixes = [chr(ord("a") + i) for i in range(k)]
    else:
        prefixes = [f"s{i}_" for i in range(k)]
    return tuple(f"{p}{j}" for p, size in zip(prefixes, sizes) for j in range(size))


def build_cgs(
    summands: Sequence[Summand],
    exterior: Mapping[tuple[int, int], EdgeColor] | Iterable[tuple[int, int, EdgeColor]],
    names: Sequence[str] | None = None,
) -> CgsInstance:
    summands = tuple(summands)
    if len(summands) < 2:
        raise TooFewSummands("a colored generalized sum needs at least two summands")

    owner: dict[int, int] = {}
    for i, s in enumerate(summands):
        if len(set(s.vertices)) != len(s.vertices):
            raise OverlappingSummands(f"summand {i} lists a vertex twice")
        for v in s.vertices:
            if v in owner:
                raise OverlappingSummands(f"vertex {v} in summands {owner[v]} and {i}")
            owner[v] = i
    total = len(owner)
    if set(owner) != set(range(total)):
        raise InstanceError("vertex ids must be dense in [0, |V|)")

    for i, s in enumerate(summands):
        members = set(s.vertices)
        if sorted(s.cycle) != sorted(s.vertices):
            raise NonAlternatingHamCycle(f"summand {i}: cycle must visit every vertex exactly once")
        for (u, v) in s.edges:
            if u not in members or v not in members:
                raise InstanceError(f"summand {i}: interior edge ({u}, {v}) leaves the summand")
        local = ColoredGraph(total, s.edges)
        if not is_alternating_cycle(local, s.cycle):
            raise NonAlternatingHamCycle(f"summand {i}: cycle {list(s.cycle)} is not alternating")

    if isinstance(exterior, Mapping):
        items = list(exterior.items())
    else:
        items = [((u, v), c) for u, v, c in exterior]
    ext: dict[tuple[int, int], EdgeColor] = {}
    for (u, v), c in items:
        if u not in owner or v not in owner:
            raise InstanceError(f"exterior edge ({u}, {v}) has an unknown endpoint")
        if owner[u] == owner[v]:
            raise InstanceError(f"exterior edge ({u}, {v}) joins vertices of one summand")
        key = edge_key(u, v)
        if key in ext:
            raise DuplicateEdge(f"exterior edge {key} given twice")
        ext[key] = EdgeColor(c)

    for i, j in itertools.combinations(range(len(summands)), 2):
        for u in summands[i].vertices:
            for v in summands[j].vertices:
                if edge_key(u, v) not in ext:
                    raise MissingExteriorEdge(f"no exterior edge between {u} and {v}")

    if names is None:
        names = default_names([len(s) for s in summands])
        # default names follow summand order, so map them onto the actual ids
        ordered = [v for s in summands for v in s.vertices]
        by_id = [""] * total
        for name, v in zip(names, ordered):
            by_id[v] = name
        names = by_id
    names = tuple(names)
    if len(names) != total or len(set(names)) != total:
        raise InstanceError("vertex names must be unique, one per vertex")
    return CgsInstance(summands, ext, names)


def induced_subsum(inst: CgsInstance, J: Iterable[int]) -> CgsInstance:
    J = sorted(set(J))
    for j in J:
        if not 0 <= j < inst.k:
            raise IndexOutOfRange(f"summand index {j} out of range [0, {inst.k})")
    if len(J) < 2:
        raise TooFewSummands("an induced sub-sum needs at least two summands")
    keep = sorted(v for j in J for v in inst.summands[j].vertices)
    index = {v: i for i, v in enumerate(keep)}

    def relabel(edges):
        return {edge_key(index[u], index[v]): c for (u, v), c in edges.items()}

    summands = [
        Summand(
            tuple(index[v] for v in inst.summands[j].vertices),
            tuple(index[v] for v in inst.summands[j].cycle),
            relabel(inst.summands[j].edges),
        )
        for j in J
    ]
    ext = relabel({e: c for e, c in inst.exterior.items() if e[0] in index and e[1] in index})
    names = [inst.names[v] for v in keep]
    return build_cgs(summands, ext, names)


def _check_sizes(sizes: Sequence[int]) -> list[int]:
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise TooFewSummands("need at least two summand sizes")
    for s in sizes:
        if s < 4 or s % 2:
            raise BadSize(f"summand size {s} must be even and at least 4")
    return sizes


def canonical_summands(sizes: Sequence[int]) -> list[Summand]:
    """Chordless summands on consecutive id ranges, each with edge 0->1 red."""
    out = []
    offset = 0
    for size in sizes:
        out.append(Summand.from_cycle(range(offset, offset + size), RED))
        offset += size
    return out


def propagate_class(
    c1: CycleSeq, c2: CycleSeq, u: int, v: int, color: EdgeColor
) -> list[tuple[int, int, EdgeColor]]:
    """Forced orbit of the edge ``uv`` in a sum without good pairs.

    Each step moves both ends along their cycles by the edge of the current
    color; the next cross edge must take the other color.
    """
    orbit = []
    cu, cv, col = u, v, color
    while True:
        orbit.append((cu, cv, col))
        cu, cv = cycle_neighbor(c1, cu, col), cycle_neighbor(c2, cv, col)
        col = col.other()
        if (cu, cv) == (u, v):
            if col is not color:
                raise AssertionError("orbit closed with the wrong color")
            return orbit


def _no_good_pair_exterior(summands: list[Summand], rng: random.Random) -> dict:
    graph = ColoredGraph(sum(len(s) for s in summands), {e: c for s in summands for e, c in s.edges.items()})
    cycles = [CycleSeq.verified(graph, s.cycle) for s in summands]
    ext: dict[tuple[int, int], EdgeColor] = {}
    for i, j in itertools.combinations(range(len(summands)), 2):
        for u in summands[i].cycle:
            for v in summands[j].cycle:
                if edge_key(u, v) in ext:
                    continue
                color = RED if rng.random() < 0.5 else BLUE
                for a, b, c in propagate_class(cycles[i], cycles[j], u, v, color):
                    key = edge_key(a, b)
                    if ext.setdefault(key, c) is not c:
                        raise AssertionError("propagation revisited an edge with another color")
    return ext


def generate_no_good_pair(sizes: Sequence[int], rng_seed: int, retries: int = DEFAULT_RETRIES) -> CgsInstance:
    """Random instance with no good pair between any two summand cycles.

    Each parallel class gets a random starting color and is then forced by
    propagation. Samples violating the non-singular hypothesis are redrawn up
    to ``retries`` times.
    """
    from apc.analysis import first_singular_side

    sizes = _check_sizes(sizes)
    rng = random.Random(rng_seed)
    summands = canonical_summands(sizes)
    for _ in range(max(1, retries)):
        inst = build_cgs(summands, _no_good_pair_exterior(summands, rng))
        if first_singular_side(inst) is None:
            return inst
    raise GenerationFailed(
        f"no instance with non-singular vertices on every side after {retries} draws (sizes {sizes})"
    )


def generate_no_good_pair_raw(sizes: Sequence[int], rng_seed: int) -> CgsInstance:
    """Single propagation draw, without the non-singular filter."""
    sizes = _check_sizes(sizes)
    summands = canonical_summands(sizes)
    return build_cgs(summands, _no_good_pair_exterior(summands, random.Random(rng_seed)))


def generate_random(sizes: Sequence[int], rng_seed: int) -> CgsInstance:
    sizes = _check_sizes(sizes)
    rng = random.Random(rng_seed)
    summands = canonical_summands(sizes)
    ext = {}
    for i, j in itertools.combinations(range(len(summands)), 2):
        for u in summands[i].vertices:
            for v in summands[j].vertices:
                ext[edge_key(u, v)] = RED if rng.random() < 0.5 else BLUE
    return build_cgs(summands, ext)
