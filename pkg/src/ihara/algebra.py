"""Exact integer matrices, integer polynomials and truncated rational power series.

Everything here works over Python ints and :class:`fractions.Fraction`, so no
result ever depends on floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from operator import index
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class IntMatrix:
    """Dense matrix of arbitrary-precision integers, immutable."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(index(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> IntMatrix:
        return cls([[0] * (nrows if ncols is None else ncols) for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, c: int) -> IntMatrix:
        return IntMatrix([[c * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self.rows)) if self.nrows else IntMatrix([])

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product ``a @ b``.

    Rows of ``a`` are scanned for nonzero entries only, which keeps products
    with sparse 0/1 matrices (adjacency, Hashimoto) cheap.
    """
    if a.ncols != b.nrows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    brows = b.rows
    out = []
    for row in a.rows:
        acc = [0] * b.ncols
        for j, x in enumerate(row):
            if x == 0:
                continue
            bj = brows[j]
            if x == 1:
                acc = [s + y for s, y in zip(acc, bj)]
            else:
                acc = [s + x * y for s, y in zip(acc, bj)]
        out.append(acc)
    return IntMatrix(out)


def trace(a: IntMatrix) -> int:
    if not a.is_square:
        raise DimensionError(f"trace of non-square {a.shape} matrix")
    return sum(a.rows[i][i] for i in range(a.nrows))


def _trace_of_product(a: IntMatrix, b: IntMatrix) -> int:
    return sum(x * b.rows[j][i] for i, row in enumerate(a.rows) for j, x in enumerate(row) if x)


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending order.

    Trailing zeros are stripped, so the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [index(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def from_text(cls, text: str) -> IntPolynomial:
        return cls(int(tok) for tok in text.split())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __add__(self, other) -> IntPolynomial:
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _as_poly(other) - self

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t**k``."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def reversed(self, n: int) -> IntPolynomial:
        """``t**n * p(1/t)``; requires ``n >= degree``."""
        if n < self.degree:
            raise ValueError(f"cannot reverse degree {self.degree} polynomial to length {n + 1}")
        padded = list(self.coeffs) + [0] * (n + 1 - len(self))
        return IntPolynomial(reversed(padded))

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient ``self / other``; raises ArithmeticError unless exact over Z."""
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq, lead = other.degree, other.coeffs[-1]
        if len(rem) - 1 < dq:
            if any(rem):
                raise ArithmeticError("inexact polynomial division")
            return IntPolynomial()
        quot = [0] * (len(rem) - dq)
        for i in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[i + dq], lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(quot)


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot treat {type(x).__name__} as IntPolynomial")


def poly_at_matrix(p: IntPolynomial, a: IntMatrix) -> IntMatrix:
    """Evaluate ``p(a)`` by Horner's rule in exact integer arithmetic."""
    if not a.is_square:
        raise DimensionError("polynomial of a non-square matrix")
    n = a.nrows
    acc = IntMatrix.zeros(n)
    eye = IntMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = mat_mul(a, acc) + eye * c
    return acc


def char_poly(a: IntMatrix) -> IntPolynomial:
    """Monic ``det(x I - a)`` by the Faddeev-LeVerrier recursion.

    Each division by ``k`` is exact over the integers; the assertion guards it.
    """
    if not a.is_square:
        raise DimensionError(f"characteristic polynomial of non-square {a.shape} matrix")
    n = a.nrows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.zeros(n)
    eye = IntMatrix.identity(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m) + eye * coeffs[n - k + 1]
        c, r = divmod(-_trace_of_product(a, m), k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - k] = c
    return IntPolynomial(coeffs)


def reversed_det(a: IntMatrix) -> IntPolynomial:
    """``det(I - t a)`` as a polynomial in ``t``."""
    return char_poly(a).reversed(a.nrows)


def determinant(a: IntMatrix) -> int:
    """Integer determinant, read off the characteristic polynomial."""
    p = char_poly(a)
    return (-1) ** a.nrows * p[0]


def _cofactor_det(m: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    n = len(m)
    total = IntPolynomial()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = IntPolynomial([-1 if inversions % 2 else 1])
        for i in range(n):
            term = term * m[i][perm[i]]
            if term.is_zero():
                break
        total = total + term
    return total


def poly_det_bareiss(m: Sequence[Sequence]) -> IntPolynomial:
    """Determinant of a square matrix of integer polynomials.

    Fraction-free Bareiss elimination with row pivoting; every division is by
    the previous pivot and is exact. Matrices of size <= 4 use the Leibniz
    expansion directly.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("determinant of a non-square matrix")
    a = [[_as_poly(x) for x in row] for row in m]
    if n == 0:
        return IntPolynomial([1])
    if n <= 4:
        return _cofactor_det(a)
    sign = 1
    prev = IntPolynomial([1])
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPolynomial()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[k][j]).exact_div(prev)
            a[i][k] = IntPolynomial()
        prev = pivot
    return a[n - 1][n - 1] * sign


def _exact(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("RationalSeries coefficients must be exact, got a float")
    return Fraction(c)


class RationalSeries:
    """Power series over Q truncated after ``t**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_exact(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalSeries is immutable")

    @classmethod
    def from_poly(cls, p: IntPolynomial, order: int) -> RationalSeries:
        return cls(p.coeffs, order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"RationalSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    def truncate(self, order: int) -> RationalSeries:
        return RationalSeries(self.coeffs, min(order, self.order))

    def __add__(self, other: RationalSeries) -> RationalSeries:
        L = min(self.order, other.order)
        return RationalSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), L)

    def __neg__(self) -> RationalSeries:
        return RationalSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        return self + (-other)

    def __mul__(self, other) -> RationalSeries:
        if isinstance(other, (int, Fraction)):
            return RationalSeries((other * c for c in self.coeffs), self.order)
        L = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return RationalSeries((sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(L + 1)), L)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalSeries) -> RationalSeries:
        return self * other.inverse()

    def inverse(self) -> RationalSeries:
        p = self.coeffs
        if p[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        q = [Fraction(1) / p[0]]
        for n in range(1, self.order + 1):
            q.append(-sum(p[k] * q[n - k] for k in range(1, n + 1)) / p[0])
        return RationalSeries(q, self.order)

    def exp(self) -> RationalSeries:
        s = self.coeffs
        if s[0] != 0:
            raise ValueError("exp needs a series with zero constant term")
        f = [Fraction(1)]
        for n in range(1, self.order + 1):
            f.append(sum((k * s[k] * f[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return RationalSeries(f, self.order)

    def log(self) -> RationalSeries:
        s = self.coeffs
        if s[0] != 1:
            raise ValueError("log needs a series with constant term 1")
        g = [Fraction(0)]
        for n in range(1, self.order + 1):
            g.append(s[n] - sum((k * g[k] * s[n - k] for k in range(1, n)), Fraction(0)) / n)
        return RationalSeries(g, self.order)


def series_inverse(p: IntPolynomial, order: int) -> RationalSeries:
    """Series ``q`` with ``p * q = 1 (mod t**(order+1))``."""
    if p[0] == 0:
        raise ZeroDivisionError("polynomial with zero constant term has no series inverse")
    return RationalSeries.from_poly(p, order).inverse()


def series_exp(s: RationalSeries) -> RationalSeries:
    return s.exp()


def series_log(s: RationalSeries) -> RationalSeries:
    return s.log()
