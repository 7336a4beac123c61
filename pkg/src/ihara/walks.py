"""Non-backtracking walk counts.

Counting sequences are plain lists indexed from length 1: ``N[0]`` is N_1,
``N[k - 1]`` is N_k.

* ``N_k`` - rooted tailless non-backtracking cycles of length k
* ``M_k`` - trace of the non-backtracking walk matrix A_k (closed walks that
  may carry a tail at the root)
* ``pi_l`` - prime cycle classes of length l
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IntMatrix, IntPolynomial, mat_mul, poly_at_matrix, trace
from .chebyshev import dilated
from .graph import Graph, adjacency_matrix, directed_edges, hashimoto_matrix, nb_successors, require_regular

DEFAULT_BUDGET = 10**9


class OracleBudgetError(RuntimeError):
    """Brute-force enumeration would exceed the configured step budget."""


class InconsistentCountsError(ArithmeticError):
    """Cycle counts that cannot come from any graph (non-integral prime counts)."""


@dataclass(frozen=True)
class NBMatrixSequence:
    graph: Graph
    d: int
    matrices: tuple[IntMatrix, ...]

    def __getitem__(self, k: int) -> IntMatrix:
        return self.matrices[k]

    def __len__(self) -> int:
        return len(self.matrices)


@dataclass(frozen=True)
class CountTable:
    kmax: int
    N: tuple[int, ...]
    M: tuple[int, ...]
    pi: tuple[int, ...]


def _at(seq, j: int) -> int:
    return seq[j - 1] if j >= 1 else 0


def _require_degree(g: Graph, d: int | None) -> int:
    d = require_regular(g, d)
    if d < 2:
        raise ValueError(f"need degree >= 2, got {d}")
    return d


def nb_matrices(g: Graph, d: int | None, kmax: int) -> NBMatrixSequence:
    """A_0..A_kmax, where (A_k)[v, w] counts non-backtracking walks v -> w of length k."""
    d = _require_degree(g, d)
    a = adjacency_matrix(g)
    eye = IntMatrix.identity(g.n)
    mats = [eye, a, mat_mul(a, a) - eye * d][: kmax + 1]
    for _ in range(3, kmax + 1):
        mats.append(mat_mul(mats[-1], a) - mats[-2] * (d - 1))
    return NBMatrixSequence(g, d, tuple(mats))


def m_sequence(seq: NBMatrixSequence) -> list[int]:
    """M_1..M_K with M_k = Tr(A_k)."""
    return [trace(m) for m in seq.matrices[1:]]


def n_from_lemma(M, d: int, k: int) -> int:
    """N_k = M_k - (d - 2)(M_{k-2} + M_{k-4} + ...), the sum stopping at M_1 or M_2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k <= 2:
        return 0
    if len(M) < k:
        raise IndexError(f"need M_1..M_{k}, have {len(M)} entries")
    return _at(M, k) - (d - 2) * sum(_at(M, j) for j in range(k - 2, 0, -2))


def n_sequence_from_lemma(M, d: int) -> list[int]:
    return [n_from_lemma(M, d, k) for k in range(1, len(M) + 1)]


def tail_decomposition_rhs(N, d: int, k: int) -> int:
    """N_k + sum_{r >= 1} (d-1)^(r-1) (d-2) N_{k-2r}; N_j is taken as 0 for j <= 0."""
    return _at(N, k) + sum((d - 1) ** (r - 1) * (d - 2) * _at(N, k - 2 * r) for r in range(1, k // 2 + 1))


def tail_decomposition_check(N, M, d: int, k: int) -> bool:
    return _at(M, k) == tail_decomposition_rhs(N, d, k)


def n_from_hashimoto(g: Graph, kmax: int) -> list[int]:
    """N_k = Tr(H^k) for k = 1..kmax."""
    h = hashimoto_matrix(g)
    out = []
    power = h
    for k in range(1, kmax + 1):
        if k > 1:
            power = mat_mul(power, h)
        out.append(trace(power))
    return out


def n_from_chebyshev(g: Graph, d: int | None, kmax: int) -> list[int]:
    """N_k = Tr F_k(A) (+ n(d-2) for even k) with F the dilated first-kind family, q = d - 1."""
    d = _require_degree(g, d)
    a = adjacency_matrix(g)
    out = []
    for k in range(1, kmax + 1):
        if k <= 2:
            out.append(0)
            continue
        value = trace(poly_at_matrix(dilated("F", d - 1, k), a))
        if k % 2 == 0:
            value += g.n * (d - 2)
        out.append(value)
    return out


# --- brute force ------------------------------------------------------------

def search_estimate(g: Graph, kmax: int) -> int:
    """Upper bound on DFS nodes visited when enumerating walks up to length kmax."""
    if g.num_edges == 0 or kmax < 1:
        return 0
    branch = max(max(g.degrees) - 1, 1)
    per_root = kmax if branch == 1 else (branch**kmax - 1) // (branch - 1)
    return 2 * g.num_edges * per_root


def _check_budget(g: Graph, kmax: int, budget: int) -> None:
    est = search_estimate(g, kmax)
    if est > budget:
        raise OracleBudgetError(f"enumeration up to length {kmax} needs ~{est} steps, budget is {budget}")


def _closed_walks(g: Graph, kmax: int):
    """Yield (length, first_edge, last_edge, path) for every closed non-backtracking walk."""
    darts = directed_edges(g)
    succ = nb_successors(g)
    for first in range(len(darts)):
        root = darts[first].origin
        path = [first]
        if darts[first].terminus == root:
            yield 1, first, first, path
        stack = [iter(succ[first])] if kmax > 1 else []
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                path.pop()
                continue
            path.append(nxt)
            if darts[nxt].terminus == root:
                yield len(path), first, nxt, path
            if len(path) < kmax:
                stack.append(iter(succ[nxt]))
            else:
                path.pop()


def oracle_tables(g: Graph, kmax: int, budget: int = DEFAULT_BUDGET) -> tuple[list[int], list[int]]:
    """(N_1..N_kmax, M_1..M_kmax) by exhaustive enumeration of edge sequences."""
    _check_budget(g, kmax, budget)
    darts = directed_edges(g)
    N = [0] * kmax
    M = [0] * kmax
    for length, first, last, _ in _closed_walks(g, kmax):
        M[length - 1] += 1
        if first != darts[last].inverse:
            N[length - 1] += 1
    return N, M


def walk_oracle(g: Graph, k: int, mode: str = "tailless_cycles", budget: int = DEFAULT_BUDGET) -> int:
    """Count closed non-backtracking walks of length k by enumeration.

    ``tailless_cycles`` gives N_k; ``closed_nb_walks`` gives M_k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in ("tailless_cycles", "closed_nb_walks"):
        raise ValueError(f"unknown oracle mode {mode!r}")
    N, M = oracle_tables(g, k, budget)
    return N[k - 1] if mode == "tailless_cycles" else M[k - 1]


# --- primes ---------------------------------------------------------------

def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def prime_counts(N) -> list[int]:
    """pi_l = (1/l) sum_{j | l} mobius(l/j) N_j, inverting N_k = sum_{l | k} l pi_l."""
    out = []
    for ell in range(1, len(N) + 1):
        total = sum(mobius(ell // j) * N[j - 1] for j in range(1, ell + 1) if ell % j == 0)
        q, r = divmod(total, ell)
        if r or q < 0:
            raise InconsistentCountsError(f"prime count at length {ell} is {total}/{ell}")
        out.append(q)
    return out


def _is_primitive(word: tuple[int, ...]) -> bool:
    n = len(word)
    return all(word != word[p:] + word[:p] for p in range(1, n) if n % p == 0)


def prime_oracle(g: Graph, kmax: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Number of rotation classes of prime tailless cycles, per length 1..kmax."""
    _check_budget(g, kmax, budget)
    darts = directed_edges(g)
    classes = [set() for _ in range(kmax)]
    for length, first, last, path in _closed_walks(g, kmax):
        if first == darts[last].inverse:
            continue
        word = tuple(path)
        if _is_primitive(word):
            classes[length - 1].add(min(word[i:] + word[:i] for i in range(length)))
    return [len(c) for c in classes]


def count_table(g: Graph, kmax: int) -> CountTable:
    """N via Tr(H^k), M via Tr(A_k) when regular (else empty), pi by Mobius inversion."""
    N = n_from_hashimoto(g, kmax)
    d = g.regular_degree()
    M = m_sequence(nb_matrices(g, d, kmax)) if d is not None and d >= 2 else []
    return CountTable(kmax, tuple(N), tuple(M), tuple(prime_counts(N)))


# --- matrix identities ------------------------------------------------------

def generating_identity_residual(seq: NBMatrixSequence) -> list[IntMatrix]:
    """Coefficients of (sum_j t^j A_j)(I - tA + (d-1) t^2 I) - (1 - t^2) I up to t^K."""
    a = seq[1] if len(seq) > 1 else adjacency_matrix(seq.graph)
    n, q = seq.graph.n, seq.d - 1
    eye = IntMatrix.identity(n)
    zero = IntMatrix.zeros(n)
    out = []
    for k in range(len(seq)):
        c = seq[k]
        if k >= 1:
            c = c - mat_mul(seq[k - 1], a)
        if k >= 2:
            c = c + seq[k - 2] * q
        target = eye if k == 0 else (-eye if k == 2 else zero)
        out.append(c - target)
    return out


def telescoping_holds(seq: NBMatrixSequence, k: int) -> bool:
    """sum_{0 <= j <= k/2} A_{k-2j} == G_k(A) with q = d - 1."""
    lhs = IntMatrix.zeros(seq.graph.n)
    for j in range(k, -1, -2):
        lhs = lhs + seq[j]
    return lhs == poly_at_matrix(dilated("G", seq.d - 1, k), seq[1])


def nb_walks_from_dilated(seq: NBMatrixSequence, k: int) -> IntMatrix:
    """A_k = G_k(A) - G_{k-2}(A)."""
    q = seq.d - 1
    p: IntPolynomial = dilated("G", q, k) - dilated("G", q, k - 2)
    return poly_at_matrix(p, seq[1])
