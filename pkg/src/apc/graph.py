"""2-edge-colored simple graphs and alternating-cycle primitives."""

from __future__ import annotations

import enum
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from apc.errors import DuplicateEdge, InstanceError, NotAlternating, VertexNotOnCycle


class EdgeColor(enum.Enum):
    RED = "red"
    BLUE = "blue"

    def other(self) -> "EdgeColor":
        return EdgeColor.BLUE if self is EdgeColor.RED else EdgeColor.RED

    @property
    def short(self) -> str:
        return "R" if self is EdgeColor.RED else "B"


RED = EdgeColor.RED
BLUE = EdgeColor.BLUE


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Simple undirected graph on vertices ``0..vertex_count-1`` with a total
    red/blue edge coloring. Immutable after construction."""

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int, EdgeColor]] | Mapping):
        if vertex_count < 0:
            raise InstanceError("vertex_count must be nonnegative")
        items = edges.items() if isinstance(edges, Mapping) else (((u, v), c) for u, v, c in edges)
        table: dict[tuple[int, int], EdgeColor] = {}
        adj: list[dict[EdgeColor, list[int]]] = [{RED: [], BLUE: []} for _ in range(vertex_count)]
        for (u, v), color in items:
            if u == v:
                raise InstanceError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InstanceError(f"edge ({u}, {v}) out of range")
            color = EdgeColor(color)
            key = edge_key(u, v)
            if key in table:
                raise DuplicateEdge(f"edge {key} given twice")
            table[key] = color
            adj[u][color].append(v)
            adj[v][color].append(u)
        for slot in adj:
            slot[RED].sort()
            slot[BLUE].sort()
        self._n = vertex_count
        self._edges = MappingProxyType(table)
        self._adj = tuple({c: tuple(vs) for c, vs in slot.items()} for slot in adj)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> Mapping[tuple[int, int], EdgeColor]:
        return self._edges

    def color(self, u: int, v: int) -> EdgeColor | None:
        return self._edges.get(edge_key(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def neighbors(self, v: int, color: EdgeColor | None = None) -> tuple[int, ...]:
        if color is None:
            return tuple(sorted(self._adj[v][RED] + self._adj[v][BLUE]))
        return self._adj[v][color]

    def induced(self, keep: Iterable[int]) -> "ColoredGraph":
        """Induced subgraph, relabelled densely in increasing order of ``keep``."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        sub = {
            (index[u], index[v]): c
            for (u, v), c in self._edges.items()
            if u in index and v in index
        }
        return ColoredGraph(len(order), sub)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._n == other._n and dict(self._edges) == dict(other._edges)

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"ColoredGraph(vertex_count={self._n}, edges={len(self._edges)})"


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation over both orientations."""
    seq = tuple(seq)
    if not seq:
        return seq
    best = None
    for cand in (seq, seq[::-1]):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best


def is_alternating_cycle(g: ColoredGraph, seq: Sequence[int]) -> bool:
    seq = list(seq)
    n = len(seq)
    if n < 4 or n % 2:
        return False
    if len(set(seq)) != n:
        return False
    prev = None
    first = None
    for i in range(n):
        c = g.color(seq[i], seq[(i + 1) % n])
        if c is None or c is prev:
            return False
        if first is None:
            first = c
        prev = c
    return prev is not first


class CycleSeq:
    """An alternating cycle stored with an explicit start and orientation.

    ``colors[i]`` is the color of the edge ``vertices[i] -> vertices[i+1]``
    (cyclically). Equality and hashing ignore rotation and reflection.
    """

    __slots__ = ("vertices", "colors", "_pos")

    def __init__(self, vertices: Sequence[int], colors: Sequence[EdgeColor]):
        self.vertices = tuple(vertices)
        self.colors = tuple(colors)
        self._pos = {v: i for i, v in enumerate(self.vertices)}

    @classmethod
    def verified(cls, g: ColoredGraph, vertices: Sequence[int]) -> "CycleSeq":
        vertices = tuple(vertices)
        if not is_alternating_cycle(g, vertices):
            raise NotAlternating(f"not an alternating cycle: {list(vertices)}")
        n = len(vertices)
        return cls(vertices, [g.color(vertices[i], vertices[(i + 1) % n]) for i in range(n)])

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise VertexNotOnCycle(f"vertex {v} is not on the cycle") from None

    def at(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def edge_color(self, i: int) -> EdgeColor:
        """Color of the edge from position ``i`` to ``i + 1``."""
        return self.colors[i % len(self.colors)]

    def edges(self) -> list[tuple[int, int]]:
        n = len(self.vertices)
        return [edge_key(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def canonical(self) -> tuple[int, ...]:
        return canonical_cycle(self.vertices)

    def rotated(self, k: int) -> "CycleSeq":
        k %= len(self.vertices)
        return CycleSeq(self.vertices[k:] + self.vertices[:k], self.colors[k:] + self.colors[:k])

    def reflected(self) -> "CycleSeq":
        """Reverse orientation, keeping the start vertex."""
        vs = (self.vertices[0],) + self.vertices[:0:-1]
        cs = self.colors[::-1]
        return CycleSeq(vs, cs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleSeq):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"CycleSeq({list(self.vertices)})"


def cycle_neighbor(c: CycleSeq, v: int, col: EdgeColor) -> int:
    """``v^r`` for ``col=RED`` and ``v^b`` for ``col=BLUE``."""
    i = c.position(v)
    if c.edge_color(i) is col:
        return c.at(i + 1)
    return c.at(i - 1)


def congruent_mod2(c: CycleSeq, u: int, v: int) -> bool:
    return c.position(u) % 2 == c.position(v) % 2
