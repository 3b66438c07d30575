"""Unit tests for the exact rational linear algebra layer."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hompoly.linalg import (
    canonical_inequality,
    integer_direction,
    mat,
    mat_det,
    mat_inverse,
    mat_mul,
    mat_rank,
    mat_vec,
    nullspace_basis,
    solve_affine_hull,
    solve_square,
    vec,
)

small_fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=7
)


def test_rank_of_dependent_rows():
    m = mat([1, 2, 3], [2, 4, 6], [0, 1, 0])
    assert mat_rank(m) == 2


def test_rank_full_and_zero():
    assert mat_rank(mat([1, 0], [0, 1])) == 2
    assert mat_rank(mat([0, 0], [0, 0])) == 0
    assert mat_rank(()) == 0


def test_rank_rectangular():
    assert mat_rank(mat([1, 2], [3, 4], [5, 6])) == 2
    assert mat_rank(mat([1, 2, 3, 4])) == 1


def test_det_small_cases():
    assert mat_det(mat([2])) == 2
    assert mat_det(mat([1, 2], [3, 4])) == -2
    assert mat_det(mat([0, 1], [1, 0])) == -1
    assert mat_det(()) == 1


def test_det_rational_entries():
    m = mat(["1/2", "1/3"], ["1/4", "1/5"])
    assert mat_det(m) == Fraction(1, 2) * Fraction(1, 5) - Fraction(1, 3) * Fraction(1, 4)


def test_det_singular():
    assert mat_det(mat([1, 2, 3], [4, 5, 6], [7, 8, 9])) == 0


@given(
    st.lists(
        st.lists(small_fractions, min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=60, deadline=None)
def test_det_matches_cofactor_expansion(rows):
    m = mat(*rows)
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    expected = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    assert mat_det(m) == expected


def test_affine_hull_of_segment():
    base, basis = solve_affine_hull((vec(0, 0, 0), vec(1, 1, 1)))
    assert base == vec(0, 0, 0)
    assert basis == (vec(1, 1, 1),)


def test_affine_hull_skips_dependent_points():
    pts = (vec(1, 0), vec(2, 0), vec(3, 0), vec(1, 1))
    base, basis = solve_affine_hull(pts)
    assert base == vec(1, 0)
    assert basis == (vec(1, 0), vec(0, 1))


def test_affine_hull_single_point():
    base, basis = solve_affine_hull((vec(5, 7),))
    assert base == vec(5, 7)
    assert basis == ()


def test_affine_hull_rank_matches_mat_rank():
    pts = (vec(0, 0, 0), vec(1, 2, 3), vec(2, 4, 6), vec(0, 0, 1))
    _, basis = solve_affine_hull(pts)
    assert len(basis) == 2
    assert mat_rank(mat(*basis)) == 2


def test_nullspace_of_full_rank_is_empty():
    assert nullspace_basis(mat([1, 0], [0, 1])) == ()


def test_nullspace_known_kernel():
    m = mat([1, 2, 3])
    basis = nullspace_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert mat_vec(m, v) == (0,)
    # free columns in ascending order, free coordinate set to 1
    assert basis[0][1] == 1 and basis[1][2] == 1


def test_nullspace_zero_matrix():
    basis = nullspace_basis(mat([0, 0, 0]))
    assert basis == (vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1))


@given(
    st.lists(
        st.lists(small_fractions, min_size=4, max_size=4),
        min_size=2,
        max_size=3,
    )
)
@settings(max_examples=60, deadline=None)
def test_nullspace_dimension_and_membership(rows):
    m = mat(*rows)
    basis = nullspace_basis(m)
    assert len(basis) == 4 - mat_rank(m)
    zero = (Fraction(0),) * len(rows)
    for v in basis:
        assert mat_vec(m, v) == zero
    if basis:
        assert mat_rank(mat(*basis)) == len(basis)


def test_solve_square_roundtrip():
    m = mat([2, 1], [1, 3])
    x = solve_square(m, vec(5, 10))
    assert mat_vec(m, x) == vec(5, 10)


def test_mat_inverse_roundtrip():
    m = mat([1, 2, 0], [0, 1, 4], ["1/2", 0, 1])
    inv = mat_inverse(m)
    assert mat_mul(m, inv) == mat([1, 0, 0], [0, 1, 0], [0, 0, 1])


def test_integer_direction_scales_and_reduces():
    assert integer_direction(vec("1/2", "1/3")) == (3, 2)
    assert integer_direction(vec(-4, -6)) == (-2, -3)
    assert integer_direction(vec(0, 5, 0)) == (0, 1, 0)


def test_canonical_inequality_keeps_direction():
    normal, offset = canonical_inequality(vec("2/3", "4/3"), Fraction(2))
    assert normal == vec(1, 2)
    assert offset == 3
    # a point satisfying the original must satisfy the canonical form
    assert Fraction(2, 3) * 1 + Fraction(4, 3) * 1 <= 2
    assert 1 * 1 + 2 * 1 <= 3
