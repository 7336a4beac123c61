"""The Ihara zeta function by every available route, and its poles.

All reciprocal polynomials are exact. Floating point enters only through the
adjacency spectrum used by :func:`poles` and :func:`ramanujan_check`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .algebra import IntMatrix, IntPolynomial, RationalSeries, char_poly, poly_det_bareiss, reversed_det, series_inverse
from .graph import DegreeError, Graph, GraphError, adjacency_matrix, hashimoto_matrix, require_regular

DEFAULT_EPS = 1e-8

ONE_MINUS_T2 = IntPolynomial([1, 0, -1])


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class ZetaReport:
    graph: Graph
    reciprocal: IntPolynomial
    method: str
    euler_exponent: int
    bass_quadratic_part: IntPolynomial | None = None


@dataclass(frozen=True)
class PoleRecord:
    value: complex
    modulus: float
    multiplicity: int
    classification: str  # trivial | ramanujan | violating | boundary


@dataclass(frozen=True)
class RamanujanVerdict:
    is_ramanujan: bool
    eigenvalues: list[float]
    bound: float
    witnesses: list[float]
    epsilon: float
    eigen_verdict: bool
    pole_verdict: bool
    poles: list[PoleRecord] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)


def _require_min_degree_two(g: Graph) -> None:
    if g.n and g.min_degree < 2:
        raise DegreeError(f"zeta function needs minimum degree 2, graph has a vertex of degree {g.min_degree}")


def _euler_exponent(g: Graph) -> int:
    return g.num_edges - g.n


def _times_one_minus_t2(p: IntPolynomial, e: int) -> IntPolynomial:
    if e < 0:
        raise GraphError(f"(1 - t^2) exponent {e} is negative; graph has more vertices than edges")
    return p * ONE_MINUS_T2**e


def zeta_reciprocal_hashimoto(g: Graph) -> ZetaReport:
    """1/zeta = det(I - tH)."""
    _require_min_degree_two(g)
    return ZetaReport(g, reversed_det(hashimoto_matrix(g)), "hashimoto", _euler_exponent(g))


def bass_quadratic(g: Graph, d: int) -> IntPolynomial:
    """det(I - tA + (d-1) t^2 I) = t^n chi_A((1 + (d-1) t^2) / t)."""
    chi = char_poly(adjacency_matrix(g))
    inner = IntPolynomial([1, 0, d - 1])
    out = IntPolynomial()
    power = IntPolynomial([1])
    for i, c in enumerate(chi.coeffs):
        if c:
            out = out + (power * c).shift(g.n - i)
        power = power * inner
    return out


def zeta_reciprocal_bass(g: Graph, d: int | None = None) -> ZetaReport:
    """1/zeta = (1 - t^2)^(|E| - |V|) det(I - tA + (d-1) t^2 I) for d-regular g."""
    d = require_regular(g, d)
    if d < 2:
        raise DegreeError(f"Bass formula needs d >= 2, got {d}")
    q = bass_quadratic(g, d)
    e = _euler_exponent(g)
    return ZetaReport(g, _times_one_minus_t2(q, e), "bass", e, q)


def bass_general(g: Graph) -> ZetaReport:
    """1/zeta = (1 - t^2)^(|E| - |V|) det(I - tA + (D - I) t^2), any min degree >= 2 graph."""
    _require_min_degree_two(g)
    a = adjacency_matrix(g)
    deg = g.degrees
    m = [
        [IntPolynomial([1, 0, deg[i] - 1]) if i == j else IntPolynomial([0, -a[i, j]]) for j in range(g.n)]
        for i in range(g.n)
    ]
    q = poly_det_bareiss(m)
    e = _euler_exponent(g)
    return ZetaReport(g, _times_one_minus_t2(q, e), "bass-general", e, q)


def zeta_series(N, order: int) -> RationalSeries:
    """exp(sum_{k <= order} N_k t^k / k)."""
    if len(N) < order:
        raise IndexError(f"need N_1..N_{order}, have {len(N)} entries")
    s = RationalSeries([0] + [Fraction(N[k - 1], k) for k in range(1, order + 1)], order)
    return s.exp()


def euler_truncation(pi, order: int) -> RationalSeries:
    """prod_{l <= order} (1 - t^l)^(-pi_l), truncated."""
    if len(pi) < order:
        raise IndexError(f"need pi_1..pi_{order}, have {len(pi)} entries")
    out = RationalSeries([1], order)
    for ell in range(1, order + 1):
        p = pi[ell - 1]
        if not p:
            continue
        factor = [0] * (order + 1)
        for j in range(order // ell + 1):
            factor[ell * j] = comb(p + j - 1, j)
        out = out * RationalSeries(factor, order)
    return out


def n_generating_series(g: Graph, d: int, order: int) -> RationalSeries:
    """sum_k N_k t^k from the spectral closed form, evaluated exactly.

    n(d-2) t^2/(1-t^2) + sum_j (mu_j t - 2(d-1) t^2) / (1 - mu_j t + (d-1) t^2);
    the sum over eigenvalues is taken by expanding in powers of mu and
    replacing mu^i with Tr(A^i).
    """
    q = d - 1
    a = adjacency_matrix(g)
    power_sums = [g.n]
    power = IntMatrix.identity(g.n)
    for _ in range(order):
        power = power @ a
        power_sums.append(sum(power.rows[i][i] for i in range(g.n)))

    # series in t with coefficients in Z[mu]: 1 / (1 - mu t + q t^2)
    mu = IntPolynomial([0, 1])
    inv = [IntPolynomial([1]), mu]
    for k in range(2, order + 1):
        inv.append(mu * inv[k - 1] - inv[k - 2] * q)
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        term = mu * inv[k - 1]
        if k >= 2:
            term = term - inv[k - 2] * (2 * q)
        coeffs[k] += sum(c * power_sums[i] for i, c in enumerate(term.coeffs))
        if k >= 2 and k % 2 == 0:
            coeffs[k] += g.n * (d - 2)
    return RationalSeries(coeffs, order)


# --- poles and the Ramanujan property ---------------------------------------

def adjacency_spectrum(g: Graph) -> list[float]:
    """Adjacency eigenvalues, descending."""
    if g.n == 0:
        return []
    a = np.array(adjacency_matrix(g).tolist(), dtype=float)
    return sorted(np.linalg.eigvalsh(a).tolist(), reverse=True)


def _quadratic_roots(mu: float, q: int) -> tuple[complex, complex]:
    # roots of q t^2 - mu t + 1
    disc = cmath.sqrt(mu * mu - 4 * q)
    return (mu + disc) / (2 * q), (mu - disc) / (2 * q)


def _classify(value: complex, mu: float | None, d: int, eps: float) -> str:
    if mu is None or abs(abs(mu) - d) <= eps:
        return "trivial"
    if abs(abs(mu) - 2 * math.sqrt(d - 1)) <= eps:
        return "boundary"
    if abs(abs(value) - 1 / math.sqrt(d - 1)) <= eps:
        return "ramanujan"
    return "violating"


def _cluster(values: list[float], eps: float) -> list[tuple[float, int]]:
    groups: list[list[float]] = []
    for v in sorted(values):
        if groups and abs(v - groups[-1][-1]) <= eps:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


def poles(report: ZetaReport, d: int | None = None, eps: float = DEFAULT_EPS) -> list[PoleRecord]:
    """Poles of zeta for a regular graph, assembled from the factored Bass form.

    Each adjacency eigenvalue mu contributes the two roots of
    1 - mu t + (d-1) t^2; the (1 - t^2) factor contributes +-1. Poles are
    sorted by modulus, then argument.
    """
    g = report.graph
    d = require_regular(g, d)
    if d < 2:
        raise DegreeError("poles need d >= 2")
    q = d - 1
    raw: list[tuple[complex, int, str]] = []
    if report.euler_exponent > 0:
        raw.append((1 + 0j, report.euler_exponent, "trivial"))
        raw.append((-1 + 0j, report.euler_exponent, "trivial"))
    for mu, mult in _cluster(adjacency_spectrum(g), eps):
        if abs(abs(mu) - d) <= eps:
            mu = math.copysign(d, mu)
        for root in _quadratic_roots(mu, q):
            raw.append((root, mult, _classify(root, mu, d, eps)))

    merged: list[list] = []
    for value, mult, cls in raw:
        for rec in merged:
            if abs(rec[0] - value) <= eps and rec[2] == cls:
                rec[1] += mult
                break
        else:
            merged.append([value, mult, cls])
    out = [PoleRecord(complex(v), abs(v), m, c) for v, m, c in merged]
    out.sort(key=lambda p: (round(p.modulus, 12), round(cmath.phase(p.value), 12)))
    return out


def ramanujan_check(g: Graph, d: int | None = None, eps: float = DEFAULT_EPS) -> RamanujanVerdict:
    """Decide the Ramanujan property by the eigenvalue bound and by pole moduli.

    Both criteria are always evaluated; a disagreement raises AssertionError.
    """
    d = require_regular(g, d)
    if not g.is_connected():
        raise DisconnectedGraphError(
            "Ramanujan verdict needs a connected graph: eigenvalue d must be simple for the trivial-spectrum convention"
        )
    if d < 2:
        raise DegreeError("Ramanujan check needs d >= 2")
    bound = 2 * math.sqrt(d - 1)
    spectrum = adjacency_spectrum(g)
    caveats = []
    nontrivial = [mu for mu in spectrum if abs(abs(mu) - d) > eps]
    witnesses = [mu for mu in nontrivial if abs(mu) > bound + eps]
    eigen_verdict = not witnesses
    if any(abs(abs(mu) - bound) <= eps for mu in nontrivial):
        caveats.append("eigenvalue within eps of 2*sqrt(d-1); classified as boundary")

    report = zeta_reciprocal_bass(g, d)
    pole_list = poles(report, d, eps)
    if d == 2:
        caveats.append("d = 2: every cycle graph is Ramanujan; pole test degenerates since 1/sqrt(d-1) = 1")
        pole_verdict = True
    else:
        pole_verdict = not any(p.classification == "violating" for p in pole_list)
    if pole_verdict != eigen_verdict:
        raise AssertionError(f"eigenvalue criterion ({eigen_verdict}) and pole criterion ({pole_verdict}) disagree")
    return RamanujanVerdict(
        is_ramanujan=eigen_verdict,
        eigenvalues=spectrum,
        bound=bound,
        witnesses=witnesses,
        epsilon=eps,
        eigen_verdict=eigen_verdict,
        pole_verdict=pole_verdict,
        poles=pole_list,
        caveats=caveats,
    )


def zeta_reciprocal(g: Graph, method: str = "hashimoto") -> ZetaReport:
    routes = {
        "hashimoto": zeta_reciprocal_hashimoto,
        "bass": zeta_reciprocal_bass,
        "bass-general": bass_general,
    }
    try:
        return routes[method](g)
    except KeyError:
        raise ValueError(f"unknown zeta method {method!r}") from None


def zeta_series_from_reciprocal(report: ZetaReport, order: int) -> RationalSeries:
    return series_inverse(report.reciprocal, order)
