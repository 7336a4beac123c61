from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ihara.algebra import (
    DimensionError,
    IntMatrix,
    IntPolynomial,
    RationalSeries,
    char_poly,
    determinant,
    mat_mul,
    poly_at_matrix,
    poly_det_bareiss,
    reversed_det,
    series_exp,
    series_inverse,
    series_log,
    trace,
)
from ihara.graph import adjacency_matrix, complete, cycle, hashimoto_matrix, petersen

from oracles import charpoly_leibniz, leibniz_det, walk_count_matrix

ints = st.integers(-6, 6)


def square_matrices(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(ints, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def T(*coeffs):
    return IntPolynomial(coeffs)


# --- matrices --------------------------------------------------------------

def test_identity_is_neutral():
    m = IntMatrix([[1, -2, 3], [4, 5, 6]])
    assert mat_mul(IntMatrix.identity(2), m) == m
    assert mat_mul(m, IntMatrix.identity(3)) == m


def test_zero_annihilates():
    m = IntMatrix([[1, 2], [3, 4]])
    assert mat_mul(IntMatrix.zeros(2), m) == IntMatrix.zeros(2)


def test_k4_square_is_2a_plus_3i():
    a = adjacency_matrix(complete(4))
    expected = walk_count_matrix(4, complete(4).edges, 2)
    assert (a @ a).tolist() == expected
    assert a @ a == a * 2 + IntMatrix.identity(4) * 3


def test_dimension_errors():
    with pytest.raises(DimensionError):
        mat_mul(IntMatrix([[1, 2]]), IntMatrix([[1, 2]]))
    with pytest.raises(DimensionError):
        trace(IntMatrix([[1, 2]]))
    with pytest.raises(DimensionError):
        char_poly(IntMatrix([[1, 2]]))
    with pytest.raises(DimensionError):
        IntMatrix([[1, 2], [3]])


def test_no_float_entries():
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])
    with pytest.raises(TypeError):
        IntPolynomial([0.5])


def test_big_integers_do_not_overflow():
    big = 10**40
    m = IntMatrix([[big, 1], [0, big]])
    assert (m @ m)[0, 0] == big * big
    assert trace(m @ m) == 2 * big * big


def test_trace_values():
    assert trace(IntMatrix.identity(7)) == 7
    assert trace(adjacency_matrix(petersen())) == 0
    a = adjacency_matrix(complete(4))
    assert trace(a @ a) == 12  # sum of degrees


# --- characteristic polynomial -------------------------------------------------

def test_char_poly_small():
    assert char_poly(IntMatrix.identity(2)) == T(1, -2, 1)
    assert char_poly(IntMatrix([[7]])) == T(-7, 1)


def test_char_poly_k4():
    a = adjacency_matrix(complete(4))
    assert list(char_poly(a).coeffs) == charpoly_leibniz(a.tolist()) == [-3, -8, -6, 0, 1]


@settings(max_examples=60)
@given(square_matrices(5))
def test_char_poly_matches_leibniz(rows):
    assert list(char_poly(IntMatrix(rows)).coeffs) == charpoly_leibniz(rows)


@settings(max_examples=40, deadline=None)
@given(square_matrices(12))
def test_cayley_hamilton(rows):
    a = IntMatrix(rows)
    assert poly_at_matrix(char_poly(a), a) == IntMatrix.zeros(a.nrows)


def test_reversed_det_examples():
    assert reversed_det(IntMatrix.zeros(3)) == T(1)
    assert reversed_det(IntMatrix.identity(2)) == T(1, -2, 1)
    assert reversed_det(hashimoto_matrix(cycle(3))) == T(1, 0, 0, -2, 0, 0, 1)


@given(square_matrices(5))
def test_reversed_det_constant_term_one(rows):
    p = reversed_det(IntMatrix(rows))
    assert p[0] == 1
    assert p.degree <= len(rows)


@given(square_matrices(4))
def test_determinant_from_char_poly_matches_bareiss(rows):
    consts = [[IntPolynomial([x]) for x in row] for row in rows]
    expected = leibniz_det([[[x] for x in row] for row in rows])
    assert determinant(IntMatrix(rows)) == (expected[0] if expected else 0)
    assert poly_det_bareiss(consts) == IntPolynomial(expected)


# --- polynomial determinant ------------------------------------------------

def test_bareiss_diagonal():
    m = [[T(1, 1) if i == j else T() for j in range(6)] for i in range(6)]
    assert poly_det_bareiss(m) == T(1, 1) ** 6


def test_bareiss_two_by_two():
    assert poly_det_bareiss([[T(1), T(0, 1)], [T(0, 1), T(1)]]) == T(1, 0, -1)


def test_bareiss_needs_pivoting():
    # leading zero pivot, exercised on the elimination path (n > 4)
    n = 6
    m = [[T() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        m[i][(i + 1) % n] = T(i + 1, 1)
    expected = leibniz_det([[list(x.coeffs) for x in row] for row in m])
    assert poly_det_bareiss(m) == IntPolynomial(expected)


def test_bareiss_singular():
    row = [T(1, 2), T(3), T(0, 1), T(1), T(2, 2)]
    m = [row, [x * 2 for x in row]] + [[T(i + j) for j in range(5)] for i in range(3)]
    assert poly_det_bareiss(m) == T()


polys = st.lists(st.integers(-3, 3), max_size=3).map(IntPolynomial)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(m):
    expected = leibniz_det([[list(x.coeffs) for x in row] for row in m])
    assert poly_det_bareiss(m) == IntPolynomial(expected)


def test_bareiss_rejects_non_square():
    with pytest.raises(DimensionError):
        poly_det_bareiss([[T(1), T(2)]])


# --- polynomials -------------------------------------------------------------

def test_polynomial_canonical_form():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).coeffs == ()
    assert IntPolynomial().degree == -1
    assert T(1, -3, 2).to_text() == "1 -3 2"
    assert IntPolynomial.from_text("1 -3 2") == T(1, -3, 2)
    assert IntPolynomial().to_text() == "0"


def test_polynomial_arithmetic():
    p = T(1, 1)
    assert p * p == T(1, 2, 1)
    assert p**3 == T(1, 3, 3, 1)
    assert p - p == T()
    assert T(1, 0, -1).exact_div(T(1, 1)) == T(1, -1)
    assert T(1, 2, 3)(Fraction(1, 2)) == Fraction(11, 4)
    assert T(1, 2).reversed(3) == T(0, 0, 2, 1)
    with pytest.raises(ArithmeticError):
        T(1, 0, 1).exact_div(T(1, 1))
    with pytest.raises(ArithmeticError):
        T(1, 1).exact_div(T(0, 2))


@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


# --- series -------------------------------------------------------------------

def F(*xs):
    return [Fraction(x) for x in xs]


def test_series_inverse_geometric():
    assert list(series_inverse(T(1, -1), 4).coeffs) == F(1, 1, 1, 1, 1)
    assert list(series_inverse(T(1, 0, -1), 5).coeffs) == F(1, 0, 1, 0, 1, 0)


def test_series_inverse_zero_constant():
    with pytest.raises(ZeroDivisionError):
        series_inverse(T(0, 1), 3)


def test_series_exp_examples():
    assert list(series_exp(RationalSeries([0, 1], 4)).coeffs) == F(1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))
    assert list(series_exp(RationalSeries([0], 3)).coeffs) == F(1, 0, 0, 0)
    harmonic = RationalSeries([0] + [Fraction(1, k) for k in range(1, 7)], 6)
    assert series_exp(harmonic) == series_inverse(T(1, -1), 6)
    with pytest.raises(ValueError):
        series_exp(RationalSeries([1, 1], 3))


def test_series_log_examples():
    assert series_log(RationalSeries([1], 5)) == RationalSeries([0], 5)
    expected = RationalSeries([0] + [Fraction(-1, k) for k in range(1, 7)], 6)
    assert series_log(RationalSeries([1, -1], 6)) == expected
    with pytest.raises(ValueError):
        series_log(RationalSeries([2, 1], 3))


def test_series_log_of_triangle_zeta_reciprocal():
    # log((1 - t^3)^2) = -2 sum_j t^{3j}/j
    s = RationalSeries.from_poly(T(1, 0, 0, -2, 0, 0, 1), 9)
    expected = [0] * 10
    for j in (1, 2, 3):
        expected[3 * j] = Fraction(-2, j)
    assert series_log(s) == RationalSeries(expected, 9)


def test_series_rejects_floats():
    with pytest.raises(TypeError):
        RationalSeries([0.5], 2)


def test_mixed_order_truncates_to_smaller():
    a = RationalSeries([1, 1, 1], 2)
    b = RationalSeries([1, 1, 1, 1, 1], 4)
    assert (a * b).order == 2 and (a + b).order == 2


fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.lists(fracs, max_size=8), st.integers(0, 8))
def test_exp_log_round_trip(tail, order):
    s = RationalSeries([1] + tail, order)
    assert series_exp(series_log(s)) == s


@given(st.lists(fracs, min_size=1, max_size=8), st.integers(0, 8))
def test_inverse_is_inverse(coeffs, order):
    if coeffs[0] == 0:
        return
    s = RationalSeries(coeffs, order)
    assert s * s.inverse() == RationalSeries([1], order)


@given(square_matrices(4))
def test_referential_transparency(rows):
    a = IntMatrix(rows)
    assert char_poly(a).coeffs == char_poly(IntMatrix(rows)).coeffs
