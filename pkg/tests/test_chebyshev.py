import math
from fractions import Fraction

import mpmath
import pytest

from ihara.algebra import IntPolynomial
from ihara.chebyshev import chebyshev, dilated, family_series, generating_check, generating_function

ANGLES = [0.05 + k * (math.pi - 0.1) / 49 for k in range(50)]


def test_small_members():
    assert chebyshev("U", 2) == IntPolynomial([-1, 0, 4])
    assert chebyshev("T", 3) == IntPolynomial([0, -3, 0, 4])
    assert dilated("G", 2, 2) == IntPolynomial([-2, 0, 1])
    assert dilated("F", 2, 3) == IntPolynomial([0, -6, 0, 1])


def test_negative_index_is_zero():
    for kind in ("U", "T"):
        assert chebyshev(kind, -1).is_zero()
    for kind in ("G", "F"):
        assert dilated(kind, 3, -2).is_zero()


def test_bad_kinds():
    with pytest.raises(ValueError):
        chebyshev("V", 2)
    with pytest.raises(ValueError):
        dilated("U", 2, 2)
    with pytest.raises(ValueError):
        dilated("G", 0, 2)


@pytest.mark.parametrize("k", [10, 3, 17])
def test_second_kind_trigonometric(k):
    u = chebyshev("U", k)
    for th in ANGLES:
        assert u(math.cos(th)) * math.sin(th) == pytest.approx(math.sin((k + 1) * th), abs=1e-9)


def test_first_kind_trigonometric():
    for k in range(0, 21):
        t = chebyshev("T", k)
        for th in ANGLES:
            assert t(math.cos(th)) == pytest.approx(math.cos(k * th), abs=1e-9)


def test_dilated_first_kind_at_q_one():
    for k in range(0, 21):
        f = dilated("F", 1, k)
        for th in ANGLES:
            assert f(2 * math.cos(th)) == pytest.approx(2 * math.cos(k * th), abs=1e-9)


@pytest.mark.parametrize("q", [1, 2, 3, 4, 7])
def test_dilated_are_scaled_classics(q):
    # high precision: degree-30 coefficients cancel badly in double precision
    with mpmath.workdps(50):
        r = mpmath.sqrt(q)
        for k in range(0, 31):
            g, f = dilated("G", q, k), dilated("F", q, k)
            for th in ANGLES[::7]:
                th = mpmath.mpf(th)
                x = 2 * r * mpmath.cos(th)
                scale = r**k
                assert abs(g(x) - scale * mpmath.sin((k + 1) * th) / mpmath.sin(th)) <= 1e-9 * scale
                assert abs(f(x) - 2 * scale * mpmath.cos(k * th)) <= 1e-9 * scale


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_degrees_and_leading_coefficients(q):
    for k in range(0, 31):
        for p in (chebyshev("U", k), chebyshev("T", k), dilated("G", q, k), dilated("F", q, k)):
            assert p.degree == k
        if k >= 1:
            assert dilated("G", q, k).coeffs[-1] == 1
            assert dilated("F", q, k).coeffs[-1] == 1


def test_u_minus_shifted_u_is_twice_t():
    for k in range(1, 51):
        assert chebyshev("U", k) - chebyshev("U", k - 2) == chebyshev("T", k) * 2


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_dilated_identity(q):
    for k in range(1, 51):
        assert dilated("G", q, k) - dilated("G", q, k - 2) * q == dilated("F", q, k)


def test_generating_check_examples():
    assert generating_check("U", 6, 0)
    assert list(family_series("U", 0, 6).coeffs) == [1, 0, -1, 0, 1, 0, -1]
    assert generating_check("T", 5, 1)
    assert list(generating_function("T", 1, 5).coeffs) == [1] * 6
    assert generating_check("U", 20, Fraction(3, 7))


@pytest.mark.parametrize("kind", ["U", "T", "G", "F"])
@pytest.mark.parametrize("x0", [Fraction(0), Fraction(1, 2), Fraction(-2, 3), Fraction(3, 7), Fraction(5, 4)])
def test_generating_functions_at_rational_points(kind, x0):
    assert generating_check(kind, 20, x0, q=3)


def test_generating_check_detects_mismatch():
    wrong = family_series("U", Fraction(1, 3), 8)
    right = generating_function("T", Fraction(1, 3), 8)
    assert wrong != right
    with pytest.raises(ValueError):
        generating_check("U", 0, 1)
