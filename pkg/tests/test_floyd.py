import random
from fractions import Fraction as F
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dudleyvc import basis as bs
from dudleyvc.exactnum import InvalidInputError
from dudleyvc.floyd import (
    InsufficientSampleError,
    Mode,
    Quality,
    build_design_matrix,
    check_condition1,
    check_condition2,
    is_certified,
    verify_general_position,
)

from oracles import cofactor_det
from scenarios import COLLINEAR, CONCYCLIC, CONCYCLIC_AMONG_8, GENERIC_4, disk_points, pts

DISK = bs.disks(2)


def naive_failures(basis, points, size, with_target):
    """All index subsets whose minor vanishes, by cofactor expansion."""
    rows = [bs.eval_row(basis, p) for p in points]
    cols = basis.n + 1 if with_target else basis.n
    return [
        B for B in combinations(range(len(points)), size)
        if cofactor_det([rows[i][:cols] for i in B]) == 0
    ]


def test_design_matrix_rows():
    dm = build_design_matrix(DISK, pts([(0, 0), (1, 0), (0, 1)]))
    assert dm.rows == ((1, 0, 0, 0), (1, 1, 0, -1), (1, 0, 1, -1))
    assert dm.mode is Mode.EXACT and dm.N == 3 and dm.n == 3


def test_design_matrix_poly_threshold():
    dm = build_design_matrix(bs.poly_threshold(2), pts([(2, 5)]))
    assert dm.rows == ((1, 2, 4, 5),)


def test_design_matrix_errors():
    with pytest.raises(InvalidInputError):
        build_design_matrix(DISK, [])
    with pytest.raises(InvalidInputError):
        build_design_matrix(DISK, pts([(0, 0), (1,)]))


def test_float_coordinates_force_approximate_mode():
    dm = build_design_matrix(DISK, [(0.5, 0.25), (1.0, 0.0)])
    assert dm.mode is Mode.APPROXIMATE
    assert build_design_matrix(bs.trig(1), pts([(0, 0)])).mode is Mode.APPROXIMATE


def test_condition1_affinely_independent():
    dm = build_design_matrix(DISK, pts([(0, 0), (1, 0), (0, 1)]))
    r = check_condition1(dm)
    assert r.holds and r.failing_subset is None
    assert r.checked_count == 1 and r.quality is Quality.CERTIFIED
    assert cofactor_det([row[:3] for row in dm.rows]) == 1


def test_condition1_collinear_witness():
    r = check_condition1(build_design_matrix(DISK, pts(COLLINEAR)))
    assert not r.holds
    assert r.failing_subset == (0, 1, 2)


def test_condition1_vandermonde():
    b = bs.poly_threshold(2)
    sample = pts([(-1, 3), (F(1, 2), 0), (2, 7), (5, 1), (F(-7, 3), 2)])
    r = check_condition1(build_design_matrix(b, sample))
    assert r.holds and r.checked_count == comb(5, 3)
    assert naive_failures(b, sample, 3, with_target=False) == []


def test_condition2_concyclic():
    dm = build_design_matrix(DISK, pts(CONCYCLIC))
    r = check_condition2(dm)
    assert not r.holds and r.failing_subset == (0, 1, 2, 3)
    assert cofactor_det([list(row) for row in dm.rows]) == 0


def test_condition2_generic():
    dm = build_design_matrix(DISK, pts(GENERIC_4))
    assert check_condition2(dm).holds
    assert cofactor_det([list(row) for row in dm.rows]) != 0


def test_condition2_dependent_target_fails_everywhere():
    b = bs.halfspaces(2)
    sample = disk_points(7, seed=3)
    r = check_condition2(build_design_matrix(b, sample), exhaustive=True)
    assert not r.holds
    assert r.failing_subsets == tuple(combinations(range(7), 4))
    assert r.checked_count == comb(7, 4)


def test_insufficient_sample():
    dm = build_design_matrix(DISK, pts([(0, 0), (1, 0)]))
    with pytest.raises(InsufficientSampleError):
        check_condition1(dm)
    dm = build_design_matrix(DISK, pts([(0, 0), (1, 0), (0, 1)]))
    with pytest.raises(InsufficientSampleError):
        check_condition2(dm)
    with pytest.raises(InsufficientSampleError):
        verify_general_position(DISK, pts([(0, 0), (1, 0), (0, 1)]))


def test_verify_general_position_random():
    c1, c2 = verify_general_position(DISK, disk_points(10, seed=1))
    assert c1.holds and c2.holds and is_certified(c1, c2)
    assert c1.checked_count == comb(10, 3) and c2.checked_count == comb(10, 4)


def test_verify_general_position_collinear():
    sample = pts(COLLINEAR + [(F(1, 3), F(1, 7)), (5, -1)])
    c1, _ = verify_general_position(DISK, sample)
    assert not c1.holds and c1.failing_subset == (0, 1, 2)


def test_verify_general_position_concyclic():
    c1, c2 = verify_general_position(DISK, pts(CONCYCLIC_AMONG_8), exhaustive=True)
    assert c1.holds
    assert not c2.holds
    assert c2.failing_subsets == ((0, 1, 2, 3),)
    assert not is_certified(c1, c2)


def test_condition1_fails_while_condition2_holds():
    # three collinear points plus one off the line: no circle through them
    sample = pts(COLLINEAR + [(0, 1)])
    dm = build_design_matrix(DISK, sample)
    assert not check_condition1(dm).holds
    assert check_condition2(dm).holds


def test_fail_fast_counts_and_exhaustive():
    sample = pts(CONCYCLIC_AMONG_8)
    dm = build_design_matrix(DISK, sample)
    fast = check_condition2(dm)
    assert fast.checked_count == 1
    full = check_condition2(dm, exhaustive=True)
    assert full.checked_count == comb(8, 4)
    assert full.failing_subset == fast.failing_subset


def test_approximate_mode_is_never_certified():
    sample = [(0.1, 0.7), (0.4, 0.2), (0.9, 0.5), (0.3, 0.95), (0.6, 0.05)]
    c1, c2 = verify_general_position(bs.trig(1), sample)
    assert c1.holds and c2.holds
    assert c1.quality is Quality.APPROXIMATE_ONLY
    assert not is_certified(c1, c2)


def test_duplicate_points_fail_condition1():
    sample = pts([(0, 0), (1, 0), (0, 0), (3, 4)])
    r = check_condition1(build_design_matrix(DISK, sample), exhaustive=True)
    assert r.failing_subsets == ((0, 1, 2), (0, 2, 3))


small_grid_samples = st.lists(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=4, max_size=7
).map(pts)


@settings(max_examples=60, deadline=None)
@given(small_grid_samples)
def test_matches_naive_cofactor_oracle(sample):
    dm = build_design_matrix(DISK, sample)
    r1 = check_condition1(dm, exhaustive=True)
    r2 = check_condition2(dm, exhaustive=True)
    assert list(r1.failing_subsets) == naive_failures(DISK, sample, 3, False)
    assert list(r2.failing_subsets) == naive_failures(DISK, sample, 4, True)


@settings(max_examples=40, deadline=None)
@given(small_grid_samples, st.randoms(use_true_random=False))
def test_permutation_invariance(sample, rnd):
    shuffled = list(sample)
    rnd.shuffle(shuffled)
    a = verify_general_position(DISK, sample)
    b = verify_general_position(DISK, shuffled)
    assert [r.holds for r in a] == [r.holds for r in b]


@settings(max_examples=40, deadline=None)
@given(small_grid_samples, st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool), min_size=3, max_size=3))
def test_member_scaling_invariance(sample, factors):
    from dudleyvc import expr as ex

    scaled = bs.FunctionBasis(
        2, DISK.target, tuple(ex.BinOp("*", ex.Const(c), m) for c, m in zip(factors, DISK.members))
    )
    a = verify_general_position(DISK, sample)
    b = verify_general_position(scaled, sample)
    assert [r.holds for r in a] == [r.holds for r in b]


def test_monotone_under_subsampling():
    sample = disk_points(9, seed=11)
    assert all(r.holds for r in verify_general_position(DISK, sample))
    rng = random.Random(5)
    for _ in range(10):
        size = rng.randint(4, 8)
        sub = rng.sample(sample, size)
        assert all(r.holds for r in verify_general_position(DISK, sub))
