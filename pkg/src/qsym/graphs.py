"""Finite simple graphs with 1-based vertex labels.

Vertices are the integers 1..n.  Graphs are immutable; adjacency is
stored as a dense boolean matrix plus precomputed neighbor lists so
that lookups inside algebraic rewriting loops stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations


class GraphFormatError(ValueError):
    """Raised when graph text input cannot be parsed.

    The offending 1-based line number is available as ``line``.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class SrgParams:
    """Strong regularity parameters (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def counting_identity_holds(self) -> bool:
        """Check k*(k - lam - 1) == (n - k - 1)*mu."""
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu


@dataclass(frozen=True)
class MooreReport:
    """Outcome of checking k-regularity with lam=0 and mu=1.

    When ``holds`` is False, ``witness`` names a vertex or vertex pair
    violating the conditions and ``reason`` says how.
    """

    holds: bool
    k: int | None = None
    witness: tuple[int, ...] | None = None
    reason: str | None = None


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n."""

    n: int
    adj: tuple[tuple[bool, ...], ...]
    # Row 0 and column 0 are padding so 1-based lookups need no offset.
    adj1: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise ValueError("adjacency matrix must be n x n")
        for i in range(self.n):
            if self.adj[i][i]:
                raise ValueError(f"loop at vertex {i + 1}")
            for j in range(i + 1, self.n):
                if self.adj[i][j] != self.adj[j][i]:
                    raise ValueError(f"adjacency not symmetric at ({i + 1}, {j + 1})")
        pad = (0,) * (self.n + 1)
        adj1 = (pad,) + tuple(
            (0,) + tuple(int(x) for x in row) for row in self.adj
        )
        nbrs = ((),) + tuple(
            tuple(v for v in range(1, self.n + 1) if self.adj[u - 1][v - 1])
            for u in range(1, self.n + 1)
        )
        object.__setattr__(self, "adj1", adj1)
        object.__setattr__(self, "_nbrs", nbrs)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj1[u][v])

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._nbrs[u])

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Neighbors of u in ascending order."""
        self._check_vertex(u)
        return self._nbrs[u]

    def common_neighbors(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices adjacent to both u and v, ascending.  Requires u != v."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("common neighbors need two distinct vertices")
        row = self.adj1[v]
        return tuple(w for w in self._nbrs[u] if row[w])

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._nbrs[1:]) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        return tuple(
            (u, v) for u in self.vertices() for v in self._nbrs[u] if u < v
        )

    def directed_edges(self) -> tuple[tuple[int, int], ...]:
        """Ordered pairs (u, v) with u adjacent to v, in lexicographic order."""
        return tuple((u, v) for u in self.vertices() for v in self._nbrs[u])

    def _check_vertex(self, u: int):
        if not (isinstance(u, int) and 1 <= u <= self.n):
            raise ValueError(f"vertex {u!r} out of range 1..{self.n}")


def from_edge_list(n: int, edge_list) -> Graph:
    """Build a graph on 1..n from an iterable of (u, v) pairs."""
    rows = [[False] * n for _ in range(n)]
    seen = set()
    for u, v in edge_list:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        rows[u - 1][v - 1] = True
        rows[v - 1][u - 1] = True
    return Graph(n, tuple(tuple(row) for row in rows))


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    edge_list = [(i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)]
    return from_edge_list(a + b, edge_list)


def complement(g: Graph) -> Graph:
    rows = tuple(
        tuple(u != v and not g.adj[u - 1][v - 1] for v in g.vertices())
        for u in g.vertices()
    )
    return Graph(g.n, rows)


def kneser_vertices(m: int, s: int) -> tuple[tuple[int, ...], ...]:
    """The s-subsets of {1..m} in lexicographic order.

    Position i (0-based) is the subset labeled by vertex i + 1 in
    ``kneser(m, s)``.
    """
    return tuple(combinations(range(1, m + 1), s))


def kneser(m: int, s: int) -> Graph:
    """Kneser graph: s-subsets of {1..m}, adjacent when disjoint."""
    if s < 1 or m < 2 * s:
        raise ValueError(f"kneser graph needs m >= 2s >= 2, got m={m}, s={s}")
    subsets = kneser_vertices(m, s)
    n = len(subsets)
    edge_list = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return from_edge_list(n, edge_list)


def petersen() -> Graph:
    """The Petersen graph as the Kneser graph of 2-subsets of {1..5}."""
    return kneser(5, 2)


def srg_params(g: Graph) -> SrgParams | None:
    """Strong regularity parameters of g, or None.

    Requires regularity, a uniform common-neighbor count over adjacent
    pairs and another over non-adjacent pairs.  Complete and empty
    graphs lack one of the two pair classes and yield None.
    """
    if g.n < 2:
        return None
    k = g.degree(1)
    if any(g.degree(u) != k for u in g.vertices()):
        return None
    lam = mu = None
    for u, v in combinations(g.vertices(), 2):
        c = len(g.common_neighbors(u, v))
        if g.adj[u - 1][v - 1]:
            if lam is None:
                lam = c
            elif lam != c:
                return None
        else:
            if mu is None:
                mu = c
            elif mu != c:
                return None
    if lam is None or mu is None:
        return None
    return SrgParams(g.n, k, lam, mu)


def check_moore_conditions(g: Graph) -> MooreReport:
    """Check that g is k-regular with lam=0 and mu=1.

    Adjacent vertices must have no common neighbor and distinct
    non-adjacent vertices exactly one.  The first violating vertex or
    pair in lexicographic order is reported.
    """
    k = g.degree(1)
    for u in g.vertices():
        d = g.degree(u)
        if d != k:
            return MooreReport(
                holds=False,
                witness=(1, u),
                reason=f"vertex 1 has degree {k} but vertex {u} has degree {d}",
            )
    for u, v in combinations(g.vertices(), 2):
        c = len(g.common_neighbors(u, v))
        if g.adj[u - 1][v - 1]:
            if c != 0:
                return MooreReport(
                    holds=False,
                    witness=(u, v),
                    reason=f"adjacent pair ({u}, {v}) has {c} common neighbors, expected 0",
                )
        else:
            if c != 1:
                return MooreReport(
                    holds=False,
                    witness=(u, v),
                    reason=f"non-adjacent pair ({u}, {v}) has {c} common neighbors, expected 1",
                )
    return MooreReport(holds=True, k=k)


def format_graph_text(g: Graph) -> str:
    """Render g in the line-based text format.

    First line is "n m"; each following line is one edge "u v" with
    u < v, edges in lexicographic order.  Output ends with a newline.
    """
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Parse the text format accepted by :func:`format_graph_text`.

    Blank lines are skipped and ``#`` starts a full-line comment.
    """
    header = None
    edge_list = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            header = (a, b)
            header_line = lineno
        else:
            edge_list.append((a, b, lineno))
    if header is None:
        raise GraphFormatError("missing header line", 1)
    n, m = header
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}", header_line)
    if m != len(edge_list):
        raise GraphFormatError(
            f"header declares {m} edges but {len(edge_list)} were given", header_line
        )
    try:
        return from_edge_list(n, [(u, v) for u, v, _ in edge_list])
    except ValueError as exc:
        # Re-scan to attribute the error to the offending line.
        seen = set()
        for u, v, lineno in edge_list:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise GraphFormatError(str(exc), lineno) from None
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(str(exc), lineno) from None
            seen.add(key)
        raise
