import pytest

from lexrank.lexsegment import (
    CASE1,
    CASE2,
    J1,
    J2_BIGROW_I3,
    J2_TAYLOR,
    PD_N1,
    SINGLE,
    SegmentError,
    all_pairs,
    build_segment,
    classify,
    cm_classification_table,
    invariants,
    invariants_original,
    linear_resolution_from_corollaries,
    normalize,
    segment,
)
from lexrank.monomial import SquarefreeMonomial, parse_monomial

from oracles import krull_dim, segment_pairs


def q(n, text):
    return parse_monomial(text, n)


def seg(n, u, v):
    return normalize(n, q(n, u), q(n, v))


@pytest.mark.parametrize("n, u, v, gens", [
    (5, "x1x3", "x2x4", ["x1x3", "x1x4", "x1x5", "x2x3", "x2x4"]),
    (4, "x1x2", "x3x4", ["x1x2", "x1x3", "x1x4", "x2x3", "x2x4", "x3x4"]),
    (6, "x1x5", "x2x3", ["x1x5", "x1x6", "x2x3"]),
])
def test_build_segment(n, u, v, gens):
    L = build_segment(n, q(n, u), q(n, v))
    assert [str(g) for g in L.gens] == gens


@pytest.mark.parametrize("n, u, v", [(5, (1, 3), (2, 4)), (6, (2, 4), (3, 5)), (7, (1, 7), (6, 7))])
def test_build_segment_matches_exponent_vector_slice(n, u, v):
    L = build_segment(n, SquarefreeMonomial.from_vars(n, u), SquarefreeMonomial.from_vars(n, v))
    assert [g.vars for g in L.gens] == segment_pairs(n, u, v)


def test_build_segment_errors():
    with pytest.raises(SegmentError):
        build_segment(1, SquarefreeMonomial.unit(1), SquarefreeMonomial.unit(1))
    with pytest.raises(SegmentError):
        build_segment(5, q(5, "x2x4"), q(5, "x1x3"))
    with pytest.raises(SegmentError):
        build_segment(5, q(5, "x1x2x3"), q(5, "x2x4"))


@pytest.mark.parametrize("n, u, v, m, shift, nu, nv", [
    (6, "x2x4", "x3x5", 5, 1, "x1x3", "x2x4"),
    (5, "x1x3", "x2x4", 5, 0, "x1x3", "x2x4"),
    (4, "x3x4", "x3x4", 2, 2, "x1x2", "x1x2"),
])
def test_normalize(n, u, v, m, shift, nu, nv):
    L = seg(n, u, v)
    assert (L.n, L.shift, str(L.u), str(L.v)) == (m, shift, nu, nv)
    assert L.normalized


@pytest.mark.parametrize("n, u, v, case", [
    (6, "x1x4", "x3x4", CASE1),
    (6, "x1x5", "x3x4", CASE2),
    (5, "x1x4", "x3x5", PD_N1),
    (5, "x1x3", "x1x5", J1),
    (5, "x1x3", "x1x3", SINGLE),
    (6, "x1x5", "x2x3", J2_TAYLOR),
    (5, "x1x3", "x2x4", J2_BIGROW_I3),
])
def test_witness_case(n, u, v, case):
    assert classify(seg(n, u, v)).witness_case == case


@pytest.mark.parametrize("n, u, v, expected", [
    (5, "x1x3", "x2x4", dict(dim=3, depth=2, projdim=3, reg=2, ara=3, cm=False)),
    (6, "x1x5", "x2x3", dict(depth=3, projdim=3)),
    (4, "x1x4", "x2x3", dict(dim=2, depth=2, cm=True, stci=True)),
    (6, "x1x5", "x2x4", dict(reg=3)),
    (5, "x1x4", "x3x5", dict(projdim=4, depth=1)),
    (4, "x1x2", "x3x4", dict(dim=1, depth=1, reg=2)),
])
def test_closed_form_examples(n, u, v, expected):
    report = invariants(seg(n, u, v)).as_dict()
    for key, value in expected.items():
        assert report[key] == value, key


def test_invariants_original_adds_shift():
    L, report = invariants_original(6, q(6, "x2x4"), q(6, "x3x5"))
    inner = invariants(L)
    assert report.dim == inner.dim + 1 and report.depth == inner.depth + 1
    assert report.projdim == inner.projdim and report.reg == inner.reg


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_initial_segment_dim_matches_brute_force(n):
    # initial segments (v != x_{n-1}x_n) use n - j, checked against the face count
    for u, v in all_pairs(n):
        L = normalize(n, u, v)
        assert invariants(L).dim == krull_dim(L.n, [g.vars for g in L.gens])


@pytest.mark.parametrize("n, count", [(3, 6), (4, 21), (5, 55), (6, 120), (7, 231)])
def test_pair_counts(n, count):
    assert len(all_pairs(n)) == count


def test_cm_table_n4():
    got = {(str(u), str(v)) for u, v in cm_classification_table(4)}
    assert got == {("x1x2", "x3x4"), ("x1x3", "x2x3"), ("x1x4", "x2x3"), ("x1x4", "x2x4")}


def test_cm_table_rejects_small_n():
    with pytest.raises(SegmentError):
        cm_classification_table(2)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_linear_resolution_corollaries_match_reg(n):
    for u, v in all_pairs(n):
        L = normalize(n, u, v)
        assert linear_resolution_from_corollaries(L) == (invariants(L).reg == 2)


def test_segment_accepts_index_pairs():
    assert segment(5, (1, 3), (2, 4)) == seg(5, "x1x3", "x2x4")
