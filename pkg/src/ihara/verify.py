"""Cross-checks every identity the library implements on one graph.

Each route computes its own artefact (N tables, reciprocal polynomials, ...)
and the checks compare them. ``inject`` perturbs named artefacts by +1 at one
index before comparison; it exists so the harness itself can be tested.

Injection targets::

    N:hashimoto N:lemma N:chebyshev N:oracle     (index k, 1-based)
    M:trace M:oracle                             (index k, 1-based)
    reciprocal:hashimoto reciprocal:bass reciprocal:bass-general
                                                 (index = power of t)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import IntPolynomial, series_inverse
from .chebyshev import chebyshev, dilated, generating_check
from .graph import Graph, directed_edges, hashimoto_matrix
from .walks import (
    DEFAULT_BUDGET,
    InconsistentCountsError,
    OracleBudgetError,
    generating_identity_residual,
    m_sequence,
    n_from_chebyshev,
    n_from_hashimoto,
    n_sequence_from_lemma,
    nb_matrices,
    oracle_tables,
    prime_counts,
    prime_oracle,
    tail_decomposition_check,
    telescoping_holds,
)
from .zeta import (
    DEFAULT_EPS,
    bass_general,
    euler_truncation,
    n_generating_series,
    ramanujan_check,
    zeta_reciprocal_bass,
    zeta_reciprocal_hashimoto,
    zeta_series,
)

INJECT_TARGETS = (
    "N:hashimoto",
    "N:lemma",
    "N:chebyshev",
    "N:oracle",
    "M:trace",
    "M:oracle",
    "reciprocal:hashimoto",
    "reciprocal:bass",
    "reciprocal:bass-general",
)

SAMPLE_POINTS = (Fraction(0), Fraction(1, 2), Fraction(-2, 3), Fraction(3, 7), Fraction(5, 4))


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # pass | fail | skip
    detail: str = ""


@dataclass
class VerifyOutcome:
    checks: list[Check] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 1 if any(c.status == "fail" for c in self.checks) else 0

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, "pass" if ok else "fail", detail))

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, "skip", reason))

    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]


def parse_injection(text: str) -> tuple[str, int]:
    target, _, idx = text.rpartition(":")
    if target not in INJECT_TARGETS or not idx.lstrip("-").isdigit():
        raise ValueError(f"bad injection {text!r}; expected TARGET:INDEX with TARGET in {', '.join(INJECT_TARGETS)}")
    return target, int(idx)


def first_difference(a, b, offset: int = 0) -> str:
    """Describe the first index where sequences differ, or '' if equal."""
    a, b = list(a), list(b)
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return f"first difference at index {i + offset}: {x} != {y}"
    return ""


class _Injector:
    def __init__(self, injections):
        self.pending = list(injections or [])

    def seq(self, target: str, values: list[int]) -> list[int]:
        values = list(values)
        for t, k in self.pending:
            if t == target and 1 <= k <= len(values):
                values[k - 1] += 1
        return values

    def poly(self, target: str, p: IntPolynomial) -> IntPolynomial:
        coeffs = list(p.coeffs)
        for t, i in self.pending:
            if t == target and i >= 0:
                coeffs += [0] * (i + 1 - len(coeffs))
                coeffs[i] += 1
        return IntPolynomial(coeffs)


def verify_graph(
    g: Graph,
    max_k: int = 10,
    budget: int = DEFAULT_BUDGET,
    eps: float = DEFAULT_EPS,
    inject=None,
) -> VerifyOutcome:
    out = VerifyOutcome()
    inj = _Injector(inject)
    d = g.regular_degree()
    regular = d is not None and d >= 2
    K = max_k

    # graph-level structure
    h = hashimoto_matrix(g)
    darts = directed_edges(g)
    degs = g.degrees
    out.add(
        "hashimoto row sums = deg(terminus) - 1",
        h.row_sums() == [degs[e.terminus] - 1 for e in darts],
    )

    if g.n and g.min_degree < 2:
        out.skip("zeta identities", f"minimum degree {g.min_degree} < 2")
        recip_h = None
    else:
        recip_h = inj.poly("reciprocal:hashimoto", zeta_reciprocal_hashimoto(g).reciprocal)
        out.add(
            "reciprocal zeta: constant term 1, degree 2|E|",
            recip_h[0] == 1 and recip_h.degree == 2 * g.num_edges,
            f"constant {recip_h[0]}, degree {recip_h.degree}, 2|E| = {2 * g.num_edges}",
        )
        if regular:
            recip_b = inj.poly("reciprocal:bass", zeta_reciprocal_bass(g, d).reciprocal)
            out.add("Bass identity: det(I - tH) = (1-t^2)^(|E|-|V|) det(I - tA + (d-1)t^2 I)",
                    recip_h == recip_b, first_difference(recip_h, recip_b))
        else:
            out.skip("Bass identity", "graph is not regular")
        recip_g = inj.poly("reciprocal:bass-general", bass_general(g).reciprocal)
        out.add("general Bass identity with degree matrix", recip_h == recip_g, first_difference(recip_h, recip_g))

    # N_k routes
    routes: dict[str, list[int]] = {"Tr(H^k)": inj.seq("N:hashimoto", n_from_hashimoto(g, K))}
    M_trace = None
    seq = None
    if regular:
        seq = nb_matrices(g, d, K)
        M_trace = inj.seq("M:trace", m_sequence(seq))
        routes["lemma"] = inj.seq("N:lemma", n_sequence_from_lemma(M_trace, d))
        routes["chebyshev"] = inj.seq("N:chebyshev", n_from_chebyshev(g, d, K))
    oracle_ok = True
    try:
        N_or, M_or = oracle_tables(g, K, budget)
        routes["oracle"] = inj.seq("N:oracle", N_or)
        M_or = inj.seq("M:oracle", M_or)
    except OracleBudgetError as exc:
        oracle_ok = False
        out.skip("brute-force oracle", str(exc))

    N = routes["Tr(H^k)"]
    mismatches = [
        f"{name}: {first_difference(N, vals, 1)}" for name, vals in routes.items() if vals != N
    ]
    out.add(f"N_k agreement across {', '.join(routes)} (k <= {K})", not mismatches, "; ".join(mismatches))

    if regular:
        if oracle_ok:
            out.add("M_k = Tr(A_k) matches enumerated closed walks", M_trace == M_or,
                    first_difference(M_trace, M_or, 1))
        bad = [k for k in range(1, K + 1) if not tail_decomposition_check(N, M_trace, d, k)]
        out.add("tail decomposition M_k = N_k + (d-2) sum (d-1)^(r-1) N_{k-2r}", not bad,
                f"fails at k = {bad}" if bad else "")
        residual = generating_identity_residual(seq)
        bad = [k for k, r in enumerate(residual) if any(any(row) for row in r.rows)]
        out.add("matrix generating function of A_k", not bad, f"nonzero residual at t^{bad}" if bad else "")
        bad = [k for k in range(1, K + 1) if not telescoping_holds(seq, k)]
        out.add("sum_j A_{k-2j} = G_k(A)", not bad, f"fails at k = {bad}" if bad else "")
        bad = [k for k in range(1, K + 1) if set(seq[k].row_sums()) != {d * (d - 1) ** (k - 1)}
               or min(min(r) for r in seq[k].rows) < 0]
        out.add("A_k entries >= 0 with row sums d(d-1)^(k-1)", not bad, f"fails at k = {bad}" if bad else "")
    else:
        out.skip("non-backtracking matrix identities", "graph is not regular")

    # primes
    try:
        pi = prime_counts(N)
        out.add("Mobius-inverted prime counts are nonnegative integers", True)
    except InconsistentCountsError as exc:
        pi = None
        out.add("Mobius-inverted prime counts are nonnegative integers", False, str(exc))
    if pi is not None and oracle_ok:
        pi_or = prime_oracle(g, K, budget)
        out.add("prime counts: Mobius inversion = enumeration", pi == pi_or, first_difference(pi, pi_or, 1))

    # series
    if recip_h is not None:
        from_recip = series_inverse(recip_h, K)
        from_exp = zeta_series(N, K)
        ok = from_recip == from_exp
        detail = "" if ok else "1/det(I-tH) vs exp: " + first_difference(from_recip.coeffs, from_exp.coeffs)
        if pi is not None:
            from_euler = euler_truncation(pi, K)
            if from_euler != from_exp:
                ok = False
                detail += " exp vs Euler product: " + first_difference(from_exp.coeffs, from_euler.coeffs)
        out.add(f"series: 1/reciprocal = exp(sum N_k t^k/k) = Euler product (order {K})", ok, detail.strip())
        out.add("series: exp(log(zeta)) = zeta", from_exp.log().exp() == from_exp)
    if regular:
        gen = n_generating_series(g, d, K)
        out.add("spectral generating function of N_k", list(gen.coeffs[1:]) == N,
                first_difference(N, gen.coeffs[1:], 1))

    # chebyshev identities for this graph's parameter
    if regular:
        q = d - 1
        top = max(K, 2)
        bad = [k for k in range(1, top + 1)
               if chebyshev("U", k) - chebyshev("U", k - 2) != chebyshev("T", k) * 2
               or dilated("G", q, k) - dilated("G", q, k - 2) * q != dilated("F", q, k)]
        out.add(f"U_k - U_(k-2) = 2 T_k and G_k - q G_(k-2) = F_k (q = {q})", not bad,
                f"fails at k = {bad}" if bad else "")
        bad = [(kind, str(x)) for kind in ("U", "T", "G", "F") for x in SAMPLE_POINTS
               if not generating_check(kind, top, x, q)]
        out.add("Chebyshev generating functions at rational points", not bad, f"fails at {bad}" if bad else "")

        if g.is_connected():
            try:
                verdict = ramanujan_check(g, d, eps)
                out.add("Ramanujan: eigenvalue and pole criteria agree",
                        verdict.eigen_verdict == verdict.pole_verdict,
                        f"Ramanujan = {verdict.is_ramanujan}")
            except AssertionError as exc:
                out.add("Ramanujan: eigenvalue and pole criteria agree", False, str(exc))
        else:
            out.skip("Ramanujan criteria", "graph is disconnected")
    return out
