"""Constructive alternating cycles with verified output.

Every function here returns :class:`CycleSeq` objects that have been checked
against the host graph; a failed check raises :class:`ConstructionError`.

Two-cycle machinery works on a :class:`PairContext`: two vertex-disjoint
alternating cycles (the longer one, of length ``2n``, playing ``x``; the
shorter, ``2m``, playing ``y``) with every cross edge present, no good pair,
and non-singular vertices on both sides. Each cycle family reads its indices
from a :class:`Frame`, a rotation/reflection of the two cycles chosen so the
family's color pattern lines up:

* the alpha frame has ``x_0 y_r y_{r+1} y_{r+2}`` alternating and ``x_0 x_1``
  of the color opposite to ``x_0 y_r`` (used by alpha, beta, gamma);
* the xi frame has ``y_0 x_s x_{s+1} x_{s+2}`` alternating and ``y_0 y_1``
  of the color opposite to ``y_0 x_s``.

Global color swaps never need to be applied: alternation is invariant
under them, so a frame only records which actual color plays "red".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from apc.analysis import GoodPair, check_hypotheses, good_pairs_between, singular_wrt
from apc.cgs import CgsInstance
from apc.errors import (
    ConstructionError,
    DegenerateRange,
    HypothesisViolated,
    IndexOutOfRange,
    LengthOutOfRange,
    NotAGoodPair,
    NotAlternating,
    NotDisjoint,
    OddLength,
    OddT,
    ParamOutOfRange,
    ViolationKind,
)
from apc.graph import ColoredGraph, CycleSeq, EdgeColor, is_alternating_cycle


def _verified(g: ColoredGraph, seq: Sequence[int], what: str) -> CycleSeq:
    try:
        return CycleSeq.verified(g, seq)
    except NotAlternating as exc:
        raise ConstructionError(f"{what} produced a non-alternating sequence {list(seq)}") from exc


def _reflect(seq: tuple[int, ...]) -> tuple[int, ...]:
    return (seq[0],) + seq[:0:-1]


@dataclass(frozen=True)
class Frame:
    big: tuple[int, ...]
    small: tuple[int, ...]
    anchor: int
    red: EdgeColor  # actual color playing the construction's "red"
    big_reflected: bool = False
    small_reflected: bool = False

    def x(self, i: int) -> int:
        return self.big[i % len(self.big)]

    def y(self, i: int) -> int:
        return self.small[i % len(self.small)]


@dataclass(frozen=True)
class PairContext:
    graph: ColoredGraph = field(repr=False)
    n: int
    m: int
    roles_swapped: bool
    alpha: Frame
    xi: Frame

    @property
    def r(self) -> int:
        return self.alpha.anchor

    @property
    def s(self) -> int:
        return self.xi.anchor

    @property
    def d(self) -> int:
        return math.gcd(self.n, self.m)

    @property
    def l(self) -> int:
        return math.lcm(self.n, self.m)

    @property
    def n_prime(self) -> int:
        return self.n // self.d

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.alpha.big) | frozenset(self.alpha.small)


def _alt4(g: ColoredGraph, a: int, b: int, c: int, d: int) -> bool:
    return is_alternating_cycle(g, (a, b, c, d))


def make_pair_context(g: ColoredGraph, c1: CycleSeq, c2: CycleSeq) -> PairContext:
    """Check the two-cycle hypotheses and locate both anchor 4-cycles.

    Anchors are the smallest valid offsets, searched in the cycles' stored
    orientation from their position-0 vertices.
    """
    if set(c1.vertices) & set(c2.vertices):
        raise NotDisjoint("the two cycles share a vertex")
    pairs = good_pairs_between(g, c1, c2)
    if pairs:
        raise HypothesisViolated(ViolationKind.GOOD_PAIR, pairs[0], f"{pairs[0].e1}, {pairs[0].e2}")
    for side, other in ((c1, c2), (c2, c1)):
        sing = singular_wrt(g, side.vertices, other.vertices)
        if len(sing) == len(side):
            raise HypothesisViolated(ViolationKind.SINGULAR_SIDE, sing[0], f"vertex {sing[0][0]}")

    swapped = len(c1) < len(c2)
    big, small = (c2, c1) if swapped else (c1, c2)
    X, Y = big.vertices, small.vertices
    n, m = len(X) // 2, len(Y) // 2

    x0 = X[0]
    r = next((r for r in range(2 * m) if _alt4(g, x0, Y[r], Y[(r + 1) % (2 * m)], Y[(r + 2) % (2 * m)])), None)
    if r is None:
        raise ConstructionError(f"no alternating 4-cycle x0 y_r y_r+1 y_r+2 through vertex {x0}")
    red = g.color(x0, Y[r]).other()
    flip = g.color(x0, X[1]) is not red
    alpha = Frame(_reflect(X) if flip else X, Y, r, red, big_reflected=flip)

    y0 = Y[0]
    s = next((s for s in range(2 * n) if _alt4(g, y0, X[s], X[(s + 1) % (2 * n)], X[(s + 2) % (2 * n)])), None)
    if s is None:
        raise ConstructionError(f"no alternating 4-cycle y0 x_s x_s+1 x_s+2 through vertex {y0}")
    red_xi = g.color(y0, X[s]).other()
    flip = g.color(y0, Y[1]) is not red_xi
    xi = Frame(X, _reflect(Y) if flip else Y, s, red_xi, small_reflected=flip)

    return PairContext(g, n, m, swapped, alpha, xi)


def find_alt_4cycle(inst: CgsInstance) -> PairContext:
    """Pair context of a two-summand instance."""
    if inst.k != 2:
        raise IndexOutOfRange(f"expected a two-summand instance, got {inst.k} summands")
    return make_pair_context(inst.graph, inst.cycle(0), inst.cycle(1))


# -- the four families ------------------------------------------------------


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise ParamOutOfRange(f"{name}={value} outside [{lo}, {hi}]")


def alpha_cycle(ctx: PairContext, t: int, h: int) -> CycleSeq:
    """``x_t y_{r+t} .. y_{r+t+h+2} x_{t+h} .. x_{t+1}``, length ``2h + 4``."""
    _check_range("t", t, 0, 2 * ctx.n - 1)
    _check_range("h", h, 0, 2 * ctx.m - 3)
    f, r = ctx.alpha, ctx.r
    seq = [f.x(t)]
    seq += [f.y(r + t + i) for i in range(h + 3)]
    seq += [f.x(t + h - i) for i in range(h)]
    return _verified(ctx.graph, seq, f"alpha(t={t}, h={h})")


def beta_cycle(ctx: PairContext, t: int) -> CycleSeq:
    """``C_1`` with ``x_t x_{t+1} x_{t+2}`` replaced by ``x_t y_{r+t+2} x_{t+2}``."""
    _check_range("t", t, 0, 2 * ctx.n - 1)
    f = ctx.alpha
    seq = [f.x(t), f.y(ctx.r + t + 2)] + [f.x(t + 2 + i) for i in range(2 * ctx.n - 2)]
    return _verified(ctx.graph, seq, f"beta(t={t})")


def gamma_cycle(ctx: PairContext, t: int, h: int) -> CycleSeq:
    """Zig-zag of ``h + 1`` detours into ``C_2`` followed by the rest of
    ``C_1``; length ``2n + 2h + 2``."""
    _check_range("t", t, 0, 2 * ctx.n - 2)
    if t % 2:
        raise OddT(f"t={t} must be even")
    _check_range("h", h, 0, ctx.m - 1)
    f, r = ctx.alpha, ctx.r
    seq = []
    for j in range(h + 1):
        seq += [f.x(t + 2 * j), f.y(r + t + 2 * j + 2), f.y(r + t + 2 * j + 1), f.x(t + 2 * j + 1)]
    seq += [f.x(i) for i in range(t + 2 * h + 2, t + 2 * ctx.n)]
    return _verified(ctx.graph, seq, f"gamma(t={t}, h={h})")


def xi_cycle(ctx: PairContext, rr: int, h: int, t: int) -> CycleSeq:
    """Cycle of length ``2 + 2d*rr + 2h`` through ``y_t`` and ``x_{s+t}``.

    Shape: ``y_t x_{s+t} .. x_{s+t+K} y_{t+H} .. y_{t+1}``. The closing cross
    edge must lie in the class of ``y_0 x_{s+2}`` (opposite colors to the
    class of ``y_0 x_s``), which holds when ``K - H = 2 + 2dj``; ``(j, H)``
    is ``(rr, h - 1)`` for ``h >= 1`` and ``(rr - 1, d - 1)`` for ``h = 0``.
    """
    d, n_prime = ctx.d, ctx.n_prime
    if n_prime == 1:
        raise DegenerateRange(f"n' = n/d = 1 (n={ctx.n}, m={ctx.m}); xi has no parameters")
    _check_range("rr", rr, 1, n_prime - 1)
    _check_range("h", h, 0, d - 1)
    _check_range("t", t, 0, 2 * ctx.l - 1)
    j, hh = (rr, h - 1) if h >= 1 else (rr - 1, d - 1)
    k = 2 * d * j + hh + 2
    f, s = ctx.xi, ctx.s
    seq = [f.y(t)] + [f.x(s + t + i) for i in range(k + 1)] + [f.y(t + hh - i) for i in range(hh)]
    return _verified(ctx.graph, seq, f"xi(rr={rr}, h={h}, t={t})")


def family_lengths(ctx: PairContext) -> dict[str, list[int]]:
    """Lengths each family produces, from the parameter ranges alone."""
    n, m, d = ctx.n, ctx.m, ctx.d
    out = {
        "alpha": [2 * h + 4 for h in range(2 * m - 2)],
        "xi": [],
        "beta": [2 * n],
        "gamma": [2 * n + 2 * h + 2 for h in range(m)],
    }
    if ctx.n_prime > 1:
        out["xi"] = sorted({2 + 2 * d * rr + 2 * h for rr in range(1, ctx.n_prime) for h in range(d)})
    return out


def family_cycles(ctx: PairContext, family: str, length: int) -> Iterator[CycleSeq]:
    """Every cycle of ``family`` with the given length, in selection order."""
    n, m, d = ctx.n, ctx.m, ctx.d
    if family == "alpha":
        h = (length - 4) // 2
        if 0 <= h <= 2 * m - 3 and length % 2 == 0:
            for t in range(2 * n):
                yield alpha_cycle(ctx, t, h)
    elif family == "xi":
        q = (length - 2) // 2
        if ctx.n_prime > 1 and length % 2 == 0 and d <= q <= n - 1:
            for t in range(2 * ctx.l):
                yield xi_cycle(ctx, q // d, q % d, t)
    elif family == "beta":
        if length == 2 * n:
            for t in range(2 * n):
                yield beta_cycle(ctx, t)
    elif family == "gamma":
        h = (length - 2 * n - 2) // 2
        if 0 <= h <= m - 1 and length % 2 == 0:
            for t in range(0, 2 * n, 2):
                yield gamma_cycle(ctx, t, h)
    else:
        raise ValueError(f"unknown family {family!r}")


FAMILY_ORDER = ("alpha", "xi", "beta", "gamma")


def cycle_through(ctx: PairContext, v: int, length: int) -> CycleSeq:
    """Alternating cycle of ``length`` through ``v`` on the pair's vertices."""
    total = 2 * (ctx.n + ctx.m)
    if length % 2:
        raise OddLength(f"odd length {length}: alternating cycles have even length")
    if not 4 <= length <= total:
        raise LengthOutOfRange(f"length {length} outside [4, {total}]")
    if v not in ctx.vertices:
        raise IndexOutOfRange(f"vertex {v} is not on either cycle")
    for family in FAMILY_ORDER:
        for cyc in family_cycles(ctx, family, length):
            if v in cyc:
                return cyc
    raise ConstructionError(f"no family covers vertex {v} at length {length}")


def pair_cycle_through(inst: CgsInstance, v: int, length: int) -> CycleSeq:
    if length % 2:
        raise OddLength(f"odd length {length}: alternating cycles have even length")
    if not 4 <= length <= inst.vertex_count:
        raise LengthOutOfRange(f"length {length} outside [4, {inst.vertex_count}]")
    return cycle_through(find_alt_4cycle(inst), v, length)


# -- merging along a good pair ---------------------------------------------


def _path_between(c: CycleSeq, start: int, end: int) -> list[int]:
    """Walk ``c`` from ``start`` to its neighbour ``end`` the long way round."""
    i, j = c.position(start), c.position(end)
    size = len(c)
    if (i + 1) % size == j:
        step = -1
    elif (i - 1) % size == j:
        step = 1
    else:
        raise NotAGoodPair(f"{start} and {end} are not adjacent on the cycle")
    return [c.at(i + step * k) for k in range(size)]


def merge_with_good_pair(c1: CycleSeq, c2: CycleSeq, gp: GoodPair, g: ColoredGraph) -> CycleSeq:
    """Alternating cycle on ``V(c1) | V(c2)`` through the good pair's edges.

    Drops the cycle edge of each cycle that lies on the monochromatic
    witness and reconnects the two resulting paths by the pair's edges.
    """
    if set(c1.vertices) & set(c2.vertices):
        raise NotDisjoint("cycles share a vertex")
    (a, b), (a2, b2) = gp.e1, gp.e2
    if a in c2 and b in c1:
        a, b = b, a
    if a2 in c2 and b2 in c1:
        a2, b2 = b2, a2
    if not (a in c1 and a2 in c1 and b in c2 and b2 in c2):
        raise NotAGoodPair("good-pair edges must each join the two cycles")
    if len({g.color(a, a2), g.color(a2, b2), g.color(b2, b), g.color(b, a)}) != 1:
        raise NotAGoodPair("witness 4-cycle is not monochromatic")
    seq = _path_between(c1, a, a2) + _path_between(c2, b2, b)
    return _verified(g, seq, "good-pair merge")


# -- k summands -------------------------------------------------------------


@dataclass
class Synthesizer:
    """Cycle factory for an instance satisfying the pancyclicity hypotheses.

    Summands other than the last are folded one at a time into a single
    Hamiltonian alternating cycle ``H`` (full-length gamma on each pair);
    the final pair ``(H, C_last)`` then serves every length. Each fold step
    re-checks its pair hypotheses.
    """

    inst: CgsInstance
    checked: bool = True  # False skips the up-front hypothesis check
    _contexts: dict[int, PairContext] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.checked:
            check_hypotheses(self.inst)

    def order(self, first: int) -> list[int]:
        return [first] + [i for i in range(self.inst.k) if i != first]

    def context(self, first: int = 0) -> PairContext:
        if first not in self._contexts:
            g = self.inst.graph
            order = self.order(first)
            hull = self.inst.cycle(order[0])
            for nxt in order[1:-1]:
                try:
                    ctx = make_pair_context(g, hull, self.inst.cycle(nxt))
                except HypothesisViolated as exc:
                    raise ConstructionError(f"fold step with summand {nxt}: {exc}") from exc
                hull = gamma_cycle(ctx, 0, ctx.m - 1)
            try:
                self._contexts[first] = make_pair_context(g, hull, self.inst.cycle(order[-1]))
            except HypothesisViolated as exc:
                raise ConstructionError(f"final fold step: {exc}") from exc
        return self._contexts[first]

    def cycle(self, v: int, length: int) -> CycleSeq:
        if length % 2:
            raise OddLength(f"odd length {length}: alternating cycles have even length")
        if not 4 <= length <= self.inst.vertex_count:
            raise LengthOutOfRange(f"length {length} outside [4, {self.inst.vertex_count}]")
        ctx = self.context(self.inst.summand_of(v))
        return cycle_through(ctx, v, length)


def pancyclic_cycle(inst: CgsInstance, v: int, length: int) -> CycleSeq:
    return Synthesizer(inst).cycle(v, length)


@dataclass
class PancyclicCertificate:
    fingerprint: str
    vertex_count: int
    entries: dict[tuple[int, int], CycleSeq]

    def required(self) -> list[tuple[int, int]]:
        return [(v, L) for v in range(self.vertex_count) for L in range(4, self.vertex_count + 1, 2)]

    def is_complete(self) -> bool:
        return set(self.entries) == set(self.required())

    def verify(self, g: ColoredGraph) -> list[str]:
        """Problems found re-checking every entry; empty when sound."""
        problems = []
        missing = set(self.required()) - set(self.entries)
        if missing:
            problems.append(f"{len(missing)} (vertex, length) cells missing")
        for (v, L), cyc in self.entries.items():
            if len(cyc) != L:
                problems.append(f"({v}, {L}): cycle has length {len(cyc)}")
            if v not in cyc:
                problems.append(f"({v}, {L}): vertex not on cycle")
            if not is_alternating_cycle(g, cyc.vertices):
                problems.append(f"({v}, {L}): not alternating")
        return problems


def certify_vertex_pancyclic(inst: CgsInstance) -> PancyclicCertificate:
    from apc.documents import instance_fingerprint

    synth = Synthesizer(inst)
    entries = {}
    for v in range(inst.vertex_count):
        for L in range(4, inst.vertex_count + 1, 2):
            entries[(v, L)] = synth.cycle(v, L)
    cert = PancyclicCertificate(instance_fingerprint(inst), inst.vertex_count, entries)
    problems = cert.verify(inst.graph)
    if problems:
        raise ConstructionError("; ".join(problems[:5]))
    return cert
