import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from apc import analysis
from apc.analysis import (
    DegreePair,
    check_hypotheses,
    color_degrees,
    find_good_cycles,
    find_good_pairs,
    hypothesis_violations,
    parallel_class,
    parallel_partition,
    singular_vertices,
    verify_lemma4,
)
from apc.cgs import generate_no_good_pair_raw, generate_random
from apc.errors import GoodPairPresent, HypothesisViolated, IndexOutOfRange, VertexInTarget, ViolationKind
from apc.graph import BLUE, RED, canonical_cycle, cycle_neighbor, edge_key

PAIR_SIZES = [(4, 4), (4, 6), (6, 6), (4, 8), (6, 8), (8, 10)]


def ids(inst, text):
    return [inst.vertex_by_name(v) for v in text.split()]


# -- good pairs and good cycles ---------------------------------------------


def test_fix8_has_no_good_pair(f8):
    assert find_good_pairs(f8, 0, 1) == []


def test_fix8gp_has_exactly_one_good_pair(f8gp):
    (gp,) = find_good_pairs(f8gp, 0, 1)
    assert gp.color is RED
    assert gp.key == tuple(sorted([edge_key(*ids(f8gp, "x0 y0")), edge_key(*ids(f8gp, "x1 y1"))]))
    assert canonical_cycle(gp.witness) == canonical_cycle(ids(f8gp, "x0 x1 y1 y0"))


def test_fix8s_has_no_good_pair(f8s):
    assert find_good_pairs(f8s, 0, 1) == []


def test_good_pairs_need_two_summands(f8):
    with pytest.raises(IndexOutOfRange):
        find_good_pairs(f8, 1, 1)


def test_good_cycles_on_fixtures(f8, f8gp):
    assert find_good_cycles(f8) == []
    assert canonical_cycle(ids(f8gp, "x0 x1 y1 y0")) in find_good_cycles(f8gp)


def test_all_exterior_squares_are_not_good_cycles(f8):
    # x0 y1 x2 y3 is a monochromatic 4-cycle, but all four of its edges are
    # exterior and it joins only two summands without a cycle edge
    g = f8.graph
    sq = ids(f8, "x0 y1 x2 y3")
    assert len({g.color(a, b) for a, b in zip(sq, sq[1:] + sq[:1])}) == 1
    assert canonical_cycle(sq) not in find_good_cycles(f8)


def brute_good_cycles(inst):
    """Every monochromatic 4-cycle with two opposite exterior edges and at
    least one edge that is not exterior, by scanning vertex quadruples."""
    g = inst.graph
    found = set()
    for quad in itertools.permutations(range(inst.vertex_count), 4):
        edges = list(zip(quad, quad[1:] + quad[:1]))
        cols = [g.color(a, b) for a, b in edges]
        if cols[0] is None or len(set(cols)) != 1:
            continue
        ext = [inst.is_exterior(a, b) for a, b in edges]
        if all(ext):
            continue
        if (ext[0] and ext[2]) or (ext[1] and ext[3]):
            found.add(canonical_cycle(quad))
    return sorted(found)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from([(4, 4), (4, 6), (4, 4, 4)]))
def test_good_cycle_scan_matches_brute_force(seed, sizes):
    inst = generate_random(sizes, seed)
    assert find_good_cycles(inst) == brute_good_cycles(inst)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from([(4, 4), (4, 6), (6, 6), (4, 8)]))
def test_good_pairs_and_good_cycles_agree_for_chordless_pairs(seed, sizes):
    inst = generate_random(sizes, seed)
    assert bool(find_good_pairs(inst, 0, 1)) == bool(find_good_cycles(inst))


def test_pairwise_clean_triples_still_have_good_cycles():
    # three-exterior-edge squares through all three summands survive
    # pairwise propagation
    inst = generate_no_good_pair_raw([4, 4, 4], 0)
    cycles = find_good_cycles(inst)
    assert cycles
    for cyc in cycles:
        owners = {inst.summand_of(v) for v in cyc}
        edges = zip(cyc, cyc[1:] + cyc[:1])
        assert len(owners) == 3
        assert sum(inst.is_exterior(a, b) for a, b in edges) == 3


# -- parallel classes -------------------------------------------------------


def test_class_of_x0y0(f8):
    cls = parallel_class(f8, tuple(ids(f8, "x0 y0")))
    assert [(f8.name(u) + f8.name(v), c) for u, v, c in cls.edges] == [
        ("x0y0", RED),
        ("x1y1", BLUE),
        ("x2y2", RED),
        ("x3y3", BLUE),
    ]


def test_class_is_independent_of_start(f8):
    a = parallel_class(f8, tuple(ids(f8, "x0 y0")))
    b = parallel_class(f8, tuple(ids(f8, "x3 y3")))
    assert a.key == b.key


def test_class_on_good_pair_fails_fast(f8gp):
    with pytest.raises(GoodPairPresent) as info:
        parallel_class(f8gp, tuple(ids(f8gp, "x0 y0")))
    assert info.value.witness is not None


def test_fix8_partition(f8):
    classes = parallel_partition(f8)
    assert sorted(len(p) for p in classes) == [4, 4, 4, 4]
    assert all(p.count(RED) == 2 and p.count(BLUE) == 2 for p in classes)


def test_partition_on_good_pair_fails(f8gp):
    with pytest.raises(GoodPairPresent):
        parallel_partition(f8gp)


@pytest.mark.parametrize("sizes", PAIR_SIZES)
def test_partition_properties(sizes):
    n, m = sizes[0] // 2, sizes[1] // 2
    l = math.lcm(n, m)
    for seed in range(20):
        inst = generate_no_good_pair_raw(sizes, seed)
        c1, c2 = inst.cycle(0), inst.cycle(1)
        classes = parallel_partition(inst)
        seen = [edge_key(u, v) for p in classes for u, v, _ in p.edges]
        assert sorted(seen) == sorted(inst.exterior)
        assert len(classes) == 2 * math.gcd(n, m)
        for p in classes:
            assert len(p) == 2 * l
            for k, (u, v, c) in enumerate(p.edges):
                nu, nv, nc = p.edges[(k + 1) % len(p)]
                assert nc is not c
                assert (nu, nv) == (cycle_neighbor(c1, u, c), cycle_neighbor(c2, v, c))


# -- singular vertices and degrees ------------------------------------------


def test_singular_vertices_on_fixtures(f8, f8s):
    assert singular_vertices(f8, 0, 1) == [] and singular_vertices(f8, 1, 0) == []
    assert [(f8s.name(v), c) for v, c in singular_vertices(f8s, 1, 0)] == [
        ("y0", RED),
        ("y1", BLUE),
        ("y2", RED),
        ("y3", BLUE),
    ]
    assert singular_vertices(f8s, 0, 1) == []


def test_color_degrees_on_fix8(f8):
    x = f8.vertex_by_name
    assert color_degrees(f8, x("x0"), 1) == DegreePair(1, 3)
    assert color_degrees(f8, x("x1"), 1) == DegreePair(3, 1)
    assert color_degrees(f8, x("x2"), 1) == DegreePair(1, 3)
    with pytest.raises(VertexInTarget):
        color_degrees(f8, x("y0"), 1)


@pytest.mark.parametrize("sizes", PAIR_SIZES)
def test_singularity_is_all_or_nothing_per_side(sizes):
    # one non-singular vertex on C_i leaves no singular vertex on C_i; the
    # other side is unconstrained (FIX8S has singular y's, non-singular x's)
    for seed in range(40):
        inst = generate_no_good_pair_raw(sizes, seed)
        for i, j in ((0, 1), (1, 0)):
            assert len(singular_vertices(inst, i, j)) in (0, len(inst.cycle(i)))


def test_sides_are_independent(f8s):
    assert singular_vertices(f8s, 0, 1) == []
    assert len(singular_vertices(f8s, 1, 0)) == 4


@pytest.mark.parametrize("sizes", PAIR_SIZES)
def test_neighbours_swap_degrees(sizes):
    for seed in range(20):
        inst = generate_no_good_pair_raw(sizes, seed)
        for i, j in ((0, 1), (1, 0)):
            c = inst.cycle(i)
            for w in c:
                d = color_degrees(inst, w, j)
                assert d.d_r + d.d_b == len(inst.cycle(j))
                for col in (RED, BLUE):
                    assert color_degrees(inst, cycle_neighbor(c, w, col), j) == d.swapped()


# -- hypotheses and the consistency report -----------------------------------


def test_hypotheses_on_fixtures(f8, f8gp, f8s):
    assert hypothesis_violations(f8) == []
    check_hypotheses(f8)
    with pytest.raises(HypothesisViolated) as info:
        check_hypotheses(f8gp)
    assert info.value.kind is ViolationKind.GOOD_PAIR
    assert "x0y0" in str(info.value) and "x1y1" in str(info.value)
    with pytest.raises(HypothesisViolated) as info:
        check_hypotheses(f8s)
    assert info.value.kind is ViolationKind.SINGULAR_SIDE
    assert "y0" in str(info.value)


def test_consistency_report_on_fix8(f8):
    report = verify_lemma4(f8)
    assert report.passed
    assert report.counts == {"exterior": 16, "red": 8, "blue": 8, "classes": 4, "class_size": 4}
    assert len(report.checks) == 8


def test_consistency_report_on_4_6():
    inst = generate_no_good_pair_raw([4, 6], 0)
    report = verify_lemma4(inst)
    assert report.passed
    assert report.counts["red"] == 12 == report.counts["blue"]
    # per class, each x meets 3 edges and each y meets 2
    for p in parallel_partition(inst):
        xs = [u for u, _, _ in p.edges]
        ys = [v for _, v, _ in p.edges]
        assert all(xs.count(u) == 3 for u in inst.cycle(0))
        assert all(ys.count(v) == 2 for v in inst.cycle(1))


def test_consistency_report_on_good_pair(f8gp):
    with pytest.raises(GoodPairPresent):
        verify_lemma4(f8gp)


def test_report_fails_when_any_check_fails():
    report = analysis.ConsistencyReport((0, 1))
    report.add("demo", False, "forced")
    assert not report.passed
    assert report.to_dict()["checks"][0] == {"name": "demo", "passed": False, "detail": "forced"}


@pytest.mark.parametrize("sizes", PAIR_SIZES)
def test_consistency_report_on_generated(sizes):
    for seed in range(25):
        report = verify_lemma4(generate_no_good_pair_raw(sizes, seed))
        assert report.passed, [c for c in report.checks if not c.passed]
