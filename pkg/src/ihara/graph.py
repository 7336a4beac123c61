"""Simple undirected graphs: validation, text I/O, generators, and the
adjacency / Hashimoto matrices.

Directed edges are numbered canonically: undirected edge ``i = (u, v)``
yields directed edge ``2i = u -> v`` and ``2i + 1 = v -> u``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .algebra import IntMatrix


class GraphError(ValueError):
    """Invalid graph or graph document."""


class GraphFormatError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class EdgeCountError(GraphError):
    pass


class NotRegularError(GraphError):
    pass


class DegreeError(GraphError):
    """A vertex of degree < 2 where the zeta function needs min degree 2."""


@dataclass(frozen=True)
class DirectedEdge:
    index: int
    origin: int
    terminus: int
    inverse: int


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        seen = set()
        for lineno, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"edge {lineno} ({u}, {v}) has a vertex outside [0, {self.n})")
            if u == v:
                raise SelfLoopError(f"edge {lineno} is a self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"edge {lineno} ({u}, {v}) is a duplicate")
            seen.add(key)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def regular_degree(self) -> int | None:
        """Common vertex degree, or None when the graph is not regular."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def is_regular(self, d: int | None = None) -> bool:
        r = self.regular_degree()
        return r is not None and (d is None or r == d)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            for w in self.neighbors[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


def require_regular(g: Graph, d: int | None = None) -> int:
    """Return the degree of ``g``; raise NotRegularError unless it is (d-)regular."""
    r = g.regular_degree()
    if r is None:
        raise NotRegularError(f"graph is not regular (degrees {sorted(set(g.degrees))})")
    if d is not None and r != d:
        raise NotRegularError(f"graph is {r}-regular, not {d}-regular")
    return r


def parse_graph(text: str) -> Graph:
    """Parse the ``<n> <m>`` header plus ``m`` edge lines format.

    Blank lines and lines starting with ``#`` are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph document")

    def ints(line: str, lineno: int) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None

    n, m = ints(lines[0], 0)
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise EdgeCountError(f"header announces {m} edges, found {len(body)}")
    return Graph(n, tuple(ints(ln, i + 1) for i, ln in enumerate(body)))


def format_graph(g: Graph) -> str:
    return "".join([f"{g.n} {g.num_edges}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# --- generators -----------------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int | None = None) -> Graph:
    """K_{a,b}; regular only when ``a == b``."""
    b = a if b is None else b
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides nonempty")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def hypercube(r: int) -> Graph:
    if r < 1:
        raise GraphError("hypercube needs r >= 1")
    return Graph(1 << r, tuple((v, v ^ (1 << b)) for v in range(1 << r) for b in range(r) if v < v ^ (1 << b)))


def circular_ladder(n: int) -> Graph:
    """Prism graph C_n x K_2: two n-cycles joined by rungs."""
    if n < 3:
        raise GraphError("circular ladder needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, tuple(edges))


def circulant(n: int, *offsets: int) -> Graph:
    """Vertex i joined to i +- s (mod n) for every offset s."""
    if n < 2 or not offsets:
        raise GraphError("circulant needs n >= 2 and at least one offset")
    classes = set()
    for s in offsets:
        s %= n
        if s == 0:
            raise GraphError("circulant offset 0 would create self-loops")
        key = min(s, n - s)
        if key in classes:
            raise GraphError(f"circulant offset {s} duplicates an earlier offset")
        classes.add(key)
    edges = []
    for s in sorted(classes):
        for i in range(n):
            j = (i + s) % n
            if 2 * s == n and i >= j:
                continue
            edges.append((i, j))
    return Graph(n, tuple(edges))


FAMILIES = {
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "petersen": petersen,
    "hypercube": hypercube,
    "circular_ladder": circular_ladder,
    "circulant": circulant,
}


def generate(family: str, *params: int) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None


# --- matrices -------------------------------------------------------------

def adjacency_matrix(g: Graph) -> IntMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = 1
    return IntMatrix(rows)


def degree_matrix(g: Graph) -> IntMatrix:
    return IntMatrix.diagonal(g.degrees)


def directed_edges(g: Graph) -> list[DirectedEdge]:
    out = []
    for i, (u, v) in enumerate(g.edges):
        out.append(DirectedEdge(2 * i, u, v, 2 * i + 1))
        out.append(DirectedEdge(2 * i + 1, v, u, 2 * i))
    return out


def outgoing(g: Graph) -> list[list[int]]:
    """For each vertex, the directed edges leaving it in ascending index order."""
    out = [[] for _ in range(g.n)]
    for e in directed_edges(g):
        out[e.origin].append(e.index)
    return out


def nb_successors(g: Graph) -> list[list[int]]:
    """For each directed edge, the directed edges that may follow it without backtracking."""
    darts = directed_edges(g)
    leaving = outgoing(g)
    return [[f for f in leaving[e.terminus] if f != e.inverse] for e in darts]


def hashimoto_matrix(g: Graph) -> IntMatrix:
    m = 2 * g.num_edges
    rows = [[0] * m for _ in range(m)]
    for i, succ in enumerate(nb_successors(g)):
        for j in succ:
            rows[i][j] = 1
    return IntMatrix(rows)
