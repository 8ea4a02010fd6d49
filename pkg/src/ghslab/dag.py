"""Simple labeled DAGs on vertices 1..n.

Topological orientation of undirected graphs, relabeling, increasing-path
enumeration with gap bookkeeping, path-length counting, and the named graph
families the verification suites sweep over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CyclicGraphError,
    DimensionMismatchError,
    InvalidEdgeError,
    InvalidParamsError,
    NotAPathError,
    NotPermutationError,
    NotTopologicalError,
)
from .intmat import IntMatrix


class Dag:
    """Immutable simple directed acyclic graph on vertices 1..n."""

    __slots__ = ("n", "edges", "_succ")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise InvalidParamsError("vertex count must be non-negative")
        edge_set = frozenset((int(i), int(j)) for i, j in edges)
        _validate_edges(n, edge_set)
        succ = _successor_map(n, edge_set)
        if _has_cycle(n, succ):
            raise CyclicGraphError("edge set contains a directed cycle")
        self.n = n
        self.edges = edge_set
        self._succ = succ

    @classmethod
    def increasing(cls, n: int, edges) -> "Dag":
        """Construct from edges already pointing label-upward (acyclic by
        construction, so the cycle check is skipped)."""
        edge_set = frozenset((int(i), int(j)) for i, j in edges)
        _validate_edges(n, edge_set)
        obj = object.__new__(cls)
        obj.n = n
        obj.edges = edge_set
        obj._succ = _successor_map(n, edge_set)
        return obj

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ.get(v, ())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Dag(n={self.n}, edges={sorted(self.edges)})"


def _validate_edges(n: int, edges: frozenset) -> None:
    for i, j in edges:
        if i == j:
            raise InvalidEdgeError(f"self-loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise InvalidEdgeError(f"edge ({i},{j}) outside 1..{n}")


def _successor_map(n: int, edges: frozenset) -> dict[int, tuple[int, ...]]:
    succ: dict[int, list[int]] = {}
    for i, j in edges:
        succ.setdefault(i, []).append(j)
    return {v: tuple(sorted(ws)) for v, ws in succ.items()}


def _has_cycle(n: int, succ: dict[int, tuple[int, ...]]) -> bool:
    # Kahn's peeling: a cycle survives when not every vertex gets removed.
    indeg = dict.fromkeys(range(1, n + 1), 0)
    for ws in succ.values():
        for w in ws:
            indeg[w] += 1
    stack = [v for v, dgr in indeg.items() if dgr == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in succ.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return removed != n


@dataclass(frozen=True)
class Path:
    """Directed path given by its visited vertices; length counts vertices,
    not edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GapSet:
    """Vertices skipped strictly between a path's endpoints, plus the host
    graph order for validating diagonal vectors against it."""

    path: Path
    gaps: frozenset[int]
    n: int


def topological_orientation(undirected_edges, n: int) -> Dag:
    """Orient every undirected pair toward its larger endpoint."""
    oriented = set()
    for pair in undirected_edges:
        i, j = (int(x) for x in pair)
        if i == j:
            raise InvalidEdgeError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise InvalidEdgeError(f"pair ({i},{j}) outside 1..{n}")
        oriented.add((min(i, j), max(i, j)))
    return Dag.increasing(n, oriented)


def is_topological_ordering(g: Dag) -> bool:
    """True when every edge points from a smaller to a larger label."""
    return all(i < j for i, j in g.edges)


def relabel(g: Dag, perm) -> Dag:
    """Replace each vertex v by perm[v-1]; edges map entrywise."""
    t = [int(x) for x in perm]
    if sorted(t) != list(range(1, g.n + 1)):
        raise NotPermutationError("relabeling must be a permutation of 1..n")
    return Dag(g.n, ((t[i - 1], t[j - 1]) for i, j in g.edges))


def enumerate_paths(g: Dag, src: int, dst: int) -> list[Path]:
    """All directed paths from src to dst, in lexicographic vertex order.

    Single vertices do not count: the list is empty when src == dst, and in a
    topologically ordered graph whenever src >= dst.
    """
    if src == dst or not (1 <= src <= g.n and 1 <= dst <= g.n):
        return []
    out: list[Path] = []

    def walk(v: int, trail: tuple[int, ...]) -> None:
        for w in g.successors(v):
            if w == dst:
                out.append(Path(trail + (w,)))
            else:
                walk(w, trail + (w,))

    walk(src, (src,))
    return out


def path_counts_to(g: Dag, dst: int) -> dict[int, dict[int, int]]:
    """Suffix path counts into dst: table[v][k] is the number of directed
    paths from v to dst visiting exactly k vertices (k = 1 only for v == dst)."""
    memo: dict[int, dict[int, int]] = {dst: {1: 1}}

    def counts(v: int) -> dict[int, int]:
        got = memo.get(v)
        if got is None:
            got = {}
            for w in g.successors(v):
                for k, c in counts(w).items():
                    got[k + 1] = got.get(k + 1, 0) + c
            memo[v] = got
        return got

    for v in range(1, g.n + 1):
        counts(v)
    return memo


def path_length_counts(g: Dag, src: int, dst: int) -> dict[int, int]:
    """Length -> number of paths from src to dst of that length (lengths >= 2)."""
    if not (1 <= src <= g.n and 1 <= dst <= g.n):
        return {}
    table = dict(path_counts_to(g, dst).get(src, {}))
    table.pop(1, None)
    return table


def path_count(g: Dag, src: int, dst: int, length: int) -> int:
    """Number of directed paths from src to dst visiting exactly `length` vertices."""
    if length < 2:
        return 0
    return path_length_counts(g, src, dst).get(length, 0)


def gaps(g: Dag, p: Path) -> GapSet:
    """Gap vertices of a path: labels strictly between its endpoints that the
    path skips. Defined against the topological ordering."""
    if not is_topological_ordering(g):
        raise NotTopologicalError("gaps are defined on topologically ordered graphs")
    verts = p.vertices
    if not verts or any(not (1 <= v <= g.n) for v in verts):
        raise NotAPathError("path vertices outside the host graph")
    for a, b in zip(verts, verts[1:]):
        if (a, b) not in g.edges:
            raise NotAPathError(f"({a},{b}) is not an edge of the host graph")
    visited = set(verts)
    gap_vertices = frozenset(u for u in range(verts[0] + 1, verts[-1]) if u not in visited)
    return GapSet(p, gap_vertices, g.n)


def gap_product(d, gs: GapSet) -> int:
    """Product of the diagonal weights over the gap vertices; 1 when gap-free."""
    weights = [int(x) for x in d]
    if len(weights) != gs.n:
        raise DimensionMismatchError(
            f"diagonal of length {len(weights)} against a graph on {gs.n} vertices"
        )
    out = 1
    for u in gs.gaps:
        out *= weights[u - 1]
    return out


def longest_path_length(g: Dag) -> int:
    """Most vertices visited by any directed path; an isolated vertex counts
    as a path of length 1."""
    memo: dict[int, int] = {}

    def depth(v: int) -> int:
        got = memo.get(v)
        if got is None:
            got = 1 + max((depth(w) for w in g.successors(v)), default=0)
            memo[v] = got
        return got

    return max((depth(v) for v in range(1, g.n + 1)), default=0)


def adjacency_matrix(g: Dag) -> IntMatrix:
    """n-by-n 0/1 matrix with a one at each directed edge."""
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        rows[i - 1][j - 1] = 1
    return IntMatrix.from_rows(rows)


def path_graph(n: int) -> Dag:
    """The directed path 1 -> 2 -> ... -> n."""
    if n < 1:
        raise InvalidParamsError("path graph needs n >= 1")
    return Dag.increasing(n, ((i, i + 1) for i in range(1, n)))


def complete_graph(n: int) -> Dag:
    """Topological orientation of the complete graph: every pair, upward."""
    if n < 1:
        raise InvalidParamsError("complete graph needs n >= 1")
    return Dag.increasing(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def family_b(i: int) -> Dag:
    """Fan family B_i on i+2 vertices: vertex 1 feeds each middle vertex
    2..i+1, and each middle vertex feeds the sink i+2."""
    if i < 1:
        raise InvalidParamsError("B family needs i >= 1")
    sink = i + 2
    edges = [(1, k) for k in range(2, i + 2)] + [(k, sink) for k in range(2, i + 2)]
    return Dag.increasing(sink, edges)


def family_c(i: int) -> Dag:
    """Spine family C_i on i+3 vertices: the path 2 -> 3 -> ... -> i+2 plus
    edges (1, j) for 2 < j <= i+2 and (k, i+3) for 2 <= k < i+2."""
    if i < 1:
        raise InvalidParamsError("C family needs i >= 1")
    n = i + 3
    edges = [(t, t + 1) for t in range(2, i + 2)]
    edges += [(1, j) for j in range(3, i + 3)]
    edges += [(k, n) for k in range(2, i + 2)]
    return Dag.increasing(n, edges)


def bipartite_matching(a: int, b: int) -> Dag:
    """Bipartite DAG from {1..a} into {a+1..a+b} matching the k-th vertices."""
    if a < 1 or b < 1:
        raise InvalidParamsError("bipartite parts need size >= 1")
    return Dag.increasing(a + b, ((k, a + k) for k in range(1, min(a, b) + 1)))


def bipartite_complete(a: int, b: int) -> Dag:
    """Bipartite DAG with every edge from {1..a} into {a+1..a+b}."""
    if a < 1 or b < 1:
        raise InvalidParamsError("bipartite parts need size >= 1")
    return Dag.increasing(a + b, ((u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)))


_FAMILIES = {
    "path": (path_graph, ("n",)),
    "complete": (complete_graph, ("n",)),
    "B": (family_b, ("i",)),
    "C": (family_c, ("i",)),
    "bipartite_matching": (bipartite_matching, ("a", "b")),
    "bipartite_complete": (bipartite_complete, ("a", "b")),
}


def family(name: str, **params) -> Dag:
    """Build a named family member: path/complete (n), B/C (i),
    bipartite_matching/bipartite_complete (a, b)."""
    try:
        builder, wanted = _FAMILIES[name]
    except KeyError:
        raise InvalidParamsError(f"unknown family {name!r}") from None
    missing = [k for k in wanted if params.get(k) is None]
    extra = [k for k in params if k not in wanted and params[k] is not None]
    if missing or extra:
        raise InvalidParamsError(
            f"family {name!r} takes parameters {wanted}, got {sorted(params)}"
        )
    return builder(*(int(params[k]) for k in wanted))
