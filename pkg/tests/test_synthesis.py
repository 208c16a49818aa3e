import pytest
from hypothesis import given, settings, strategies as st

from apc.analysis import find_good_pairs, first_singular_side
from apc.cgs import Summand, build_cgs, generate_no_good_pair, generate_no_good_pair_raw, generate_random
from apc.errors import (
    ConstructionError,
    DegenerateRange,
    HypothesisViolated,
    LengthOutOfRange,
    NotAGoodPair,
    NotDisjoint,
    OddLength,
    OddT,
    ParamOutOfRange,
    ViolationKind,
)
from apc.graph import CycleSeq, canonical_cycle, is_alternating_cycle
from apc.synthesis import (
    FAMILY_ORDER,
    GoodPair,
    Synthesizer,
    alpha_cycle,
    beta_cycle,
    certify_vertex_pancyclic,
    family_cycles,
    family_lengths,
    find_alt_4cycle,
    gamma_cycle,
    merge_with_good_pair,
    pair_cycle_through,
    pancyclic_cycle,
    xi_cycle,
)

# sizes with gcd(n, m) > 1, so non-singular instances exist
GOOD_SIZES = [(4, 4), (6, 6), (4, 8), (8, 4), (8, 8), (12, 8), (12, 6), (6, 12), (12, 12)]


def ids(inst, text):
    return [inst.vertex_by_name(v) for v in text.split()]


def same_cycle(inst, cyc, text):
    return canonical_cycle(cyc.vertices) == canonical_cycle(ids(inst, text))


@pytest.fixture(scope="module")
def ctx8():
    from apc.fixtures import fix8

    return find_alt_4cycle(fix8())


# -- pair context -----------------------------------------------------------


def test_fix8_anchors(ctx8):
    assert (ctx8.n, ctx8.m, ctx8.d, ctx8.l, ctx8.n_prime) == (2, 2, 2, 2, 1)
    assert ctx8.r == 2 and ctx8.s == 2
    assert not ctx8.roles_swapped
    assert not ctx8.alpha.big_reflected and not ctx8.xi.small_reflected


def test_fix8_anchor_square_colors(f8):
    g = f8.graph
    sq = ids(f8, "x0 y2 y3 y0")
    assert [g.color(a, b).short for a, b in zip(sq, sq[1:] + sq[:1])] == ["B", "R", "B", "R"]


def test_context_rejects_singular_side(f8s):
    with pytest.raises(HypothesisViolated) as info:
        find_alt_4cycle(f8s)
    assert info.value.kind is ViolationKind.SINGULAR_SIDE
    assert info.value.witness[0] == f8s.vertex_by_name("y0")


def test_context_rejects_good_pair(f8gp):
    with pytest.raises(HypothesisViolated) as info:
        find_alt_4cycle(f8gp)
    assert info.value.kind is ViolationKind.GOOD_PAIR


def test_longer_cycle_plays_x():
    ctx = find_alt_4cycle(generate_no_good_pair([4, 8], 0))
    assert ctx.roles_swapped and (ctx.n, ctx.m) == (4, 2)


# -- families on FIX8 ---------------------------------------------------------


def test_alpha_on_fix8(f8, ctx8):
    cyc = alpha_cycle(ctx8, 0, 1)
    assert len(cyc) == 6
    assert same_cycle(f8, cyc, "x0 y2 y3 y0 y1 x1")


def test_beta_on_fix8(f8, ctx8):
    cyc = beta_cycle(ctx8, 0)
    assert same_cycle(f8, cyc, "x0 y0 x2 x3")
    assert len(beta_cycle(ctx8, 3)) == 4


def test_gamma_on_fix8(f8, ctx8):
    cyc = gamma_cycle(ctx8, 0, 1)
    assert same_cycle(f8, cyc, "x0 y0 y3 x1 x2 y2 y1 x3")
    assert len(gamma_cycle(ctx8, 2, 0)) == 6


def test_xi_degenerate_on_fix8(ctx8):
    with pytest.raises(DegenerateRange):
        xi_cycle(ctx8, 1, 0, 0)
    assert family_lengths(ctx8)["xi"] == []


def test_parameter_checks(ctx8):
    with pytest.raises(ParamOutOfRange):
        alpha_cycle(ctx8, 4, 0)
    with pytest.raises(ParamOutOfRange):
        alpha_cycle(ctx8, 0, 2)
    with pytest.raises(ParamOutOfRange):
        beta_cycle(ctx8, -1)
    with pytest.raises(OddT):
        gamma_cycle(ctx8, 1, 0)
    with pytest.raises(ParamOutOfRange):
        gamma_cycle(ctx8, 0, 2)


def test_alpha_length_extremes():
    ctx = find_alt_4cycle(generate_no_good_pair([8, 8], 1))
    assert len(alpha_cycle(ctx, 0, 0)) == 4
    assert len(alpha_cycle(ctx, 0, 2 * ctx.m - 3)) == 4 * ctx.m - 2


def test_xi_length_extremes():
    ctx = find_alt_4cycle(generate_no_good_pair([8, 4], 0))
    assert (ctx.n, ctx.m, ctx.d, ctx.n_prime) == (4, 2, 2, 2)
    assert len(xi_cycle(ctx, 1, 0, 0)) == 2 + 2 * ctx.d
    assert len(xi_cycle(ctx, ctx.n_prime - 1, ctx.d - 1, 2 * ctx.l - 1)) == 2 * ctx.n
    with pytest.raises(ParamOutOfRange):
        xi_cycle(ctx, 0, 0, 0)


# -- families on generated pairs ---------------------------------------------


@pytest.mark.parametrize("sizes", GOOD_SIZES)
def test_every_parameter_gives_the_formula_length(sizes):
    for seed in range(8):
        ctx = find_alt_4cycle(generate_no_good_pair(sizes, seed))
        n, m, d = ctx.n, ctx.m, ctx.d
        g = ctx.graph
        for t in range(2 * n):
            for h in range(2 * m - 2):
                c = alpha_cycle(ctx, t, h)
                assert len(c) == 2 * h + 4 and is_alternating_cycle(g, c.vertices)
            c = beta_cycle(ctx, t)
            assert len(c) == 2 * n and is_alternating_cycle(g, c.vertices)
        for t in range(0, 2 * n, 2):
            for h in range(m):
                c = gamma_cycle(ctx, t, h)
                assert len(c) == 2 * n + 2 * h + 2 and is_alternating_cycle(g, c.vertices)
        for rr in range(1, ctx.n_prime):
            for h in range(d):
                for t in range(2 * ctx.l):
                    c = xi_cycle(ctx, rr, h, t)
                    assert len(c) == 2 + 2 * d * rr + 2 * h and is_alternating_cycle(g, c.vertices)


@pytest.mark.parametrize("sizes", GOOD_SIZES)
def test_length_ranges_cover_every_even_length(sizes):
    ctx = find_alt_4cycle(generate_no_good_pair(sizes, 0))
    lengths = family_lengths(ctx)
    union = set().union(*lengths.values())
    assert union == set(range(4, 2 * (ctx.n + ctx.m) + 1, 2))


@pytest.mark.parametrize("sizes", GOOD_SIZES)
def test_each_family_reaches_every_vertex(sizes):
    ctx = find_alt_4cycle(generate_no_good_pair(sizes, 2))
    for family, lengths in family_lengths(ctx).items():
        for L in lengths:
            seen = set()
            for c in family_cycles(ctx, family, L):
                seen.update(c.vertices)
            assert seen == ctx.vertices, (family, L)


def test_family_order_is_fixed():
    assert FAMILY_ORDER == ("alpha", "xi", "beta", "gamma")


# -- pair driver --------------------------------------------------------------


def test_pair_cycle_on_fix8(f8):
    x = f8.vertex_by_name
    c6 = pair_cycle_through(f8, x("x0"), 6)
    assert len(c6) == 6 and x("x0") in c6 and is_alternating_cycle(f8.graph, c6.vertices)
    c8 = pair_cycle_through(f8, x("y3"), 8)
    assert sorted(c8.vertices) == list(range(8))
    with pytest.raises(LengthOutOfRange):
        pair_cycle_through(f8, x("x0"), 10)
    with pytest.raises(OddLength):
        pair_cycle_through(f8, x("x0"), 7)


def test_degenerate_fold_keeps_the_pair_contract(f8):
    for v in range(8):
        for L in (4, 6, 8):
            for cyc in (pancyclic_cycle(f8, v, L), pair_cycle_through(f8, v, L)):
                assert len(cyc) == L and v in cyc and is_alternating_cycle(f8.graph, cyc.vertices)
    with pytest.raises(LengthOutOfRange):
        pancyclic_cycle(f8, 0, 10)


def test_selection_is_deterministic():
    inst = generate_no_good_pair([6, 6], 3)
    a = certify_vertex_pancyclic(inst)
    b = certify_vertex_pancyclic(inst)
    assert all(a.entries[k].vertices == b.entries[k].vertices for k in a.entries)


def rebuilt(inst, shift, flip_first):
    """Same graph with the summand cycles stored rotated and reflected."""
    summands = []
    for i, s in enumerate(inst.summands):
        c = CycleSeq.verified(inst.graph, s.cycle).rotated(shift + i)
        if flip_first == (i == 0):
            c = c.reflected()
        summands.append(Summand(s.vertices, c.vertices, s.edges))
    return build_cgs(summands, inst.exterior, inst.names)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 500), st.sampled_from([(4, 4), (6, 6), (4, 8), (8, 4)]), st.integers(0, 7), st.booleans())
def test_stored_orientation_does_not_matter(seed, sizes, shift, flip_first):
    inst = rebuilt(generate_no_good_pair(sizes, seed), shift, flip_first)
    cert = certify_vertex_pancyclic(inst)
    assert cert.is_complete() and cert.verify(inst.graph) == []


# -- merging along a good pair ------------------------------------------------


def test_merge_on_fix8gp(f8gp):
    (gp,) = find_good_pairs(f8gp, 0, 1)
    cyc = merge_with_good_pair(f8gp.cycle(0), f8gp.cycle(1), gp, f8gp.graph)
    assert same_cycle(f8gp, cyc, "x1 x2 x3 x0 y0 y3 y2 y1")


def test_merge_rejects_overlap(f8gp):
    (gp,) = find_good_pairs(f8gp, 0, 1)
    with pytest.raises(NotDisjoint):
        merge_with_good_pair(f8gp.cycle(0), f8gp.cycle(0), gp, f8gp.graph)


def test_merge_rejects_bichromatic_witness(f8):
    x = f8.vertex_by_name
    fake = GoodPair((x("x0"), x("y0")), (x("x1"), x("y1")), tuple(ids(f8, "x0 x1 y1 y0")), f8.graph.color(0, 4))
    with pytest.raises(NotAGoodPair):
        merge_with_good_pair(f8.cycle(0), f8.cycle(1), fake, f8.graph)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from([(4, 4), (4, 6), (6, 6), (6, 8)]), st.integers(0, 9), st.booleans(), st.booleans())
def test_merge_spans_both_cycles(seed, sizes, shift, flip1, flip2):
    inst = generate_random(sizes, seed)
    c1, c2 = inst.cycle(0).rotated(shift), inst.cycle(1).rotated(shift + 1)
    c1 = c1.reflected() if flip1 else c1
    c2 = c2.reflected() if flip2 else c2
    for gp in find_good_pairs(inst, 0, 1):
        cyc = merge_with_good_pair(c1, c2, gp, inst.graph)
        assert is_alternating_cycle(inst.graph, cyc.vertices)
        assert set(cyc.vertices) == set(c1.vertices) | set(c2.vertices)


# -- k summands -----------------------------------------------------------------


def test_good_cycle_blocks_synthesis():
    inst = generate_no_good_pair_raw([4, 4, 4], 0)
    with pytest.raises(HypothesisViolated) as info:
        pancyclic_cycle(inst, 0, 4)
    assert info.value.kind is ViolationKind.GOOD_CYCLE
    assert len(info.value.witness) == 4


def test_fold_aborts_instead_of_guessing():
    # with the up-front check skipped, pairwise-clean triples still fail a
    # fold step: the merged Hamiltonian cycle has a good pair with C_3
    tried = 0
    for seed in range(40):
        inst = generate_no_good_pair_raw([4, 4, 4], seed)
        if first_singular_side(inst) is not None:
            continue
        tried += 1
        with pytest.raises(ConstructionError, match="fold step"):
            Synthesizer(inst, checked=False).cycle(0, 12)
    assert tried > 0


# -- certificates ---------------------------------------------------------------


def test_fix8_certificate(f8):
    cert = certify_vertex_pancyclic(f8)
    assert len(cert.entries) == 24 and cert.is_complete()
    assert cert.verify(f8.graph) == []
    assert cert.fingerprint.startswith("sha256:")


def test_certificate_verify_catches_bad_entries(f8):
    cert = certify_vertex_pancyclic(f8)
    k = (0, 6)
    cert.entries[k] = cert.entries[(0, 4)]
    del cert.entries[(1, 8)]
    problems = cert.verify(f8.graph)
    assert any("missing" in p for p in problems)
    assert any("(0, 6)" in p for p in problems)


def test_no_certificate_under_violation(f8s, f8gp):
    for inst in (f8s, f8gp):
        with pytest.raises(HypothesisViolated):
            certify_vertex_pancyclic(inst)

