# -*- encoding: utf-8 -*-
"""
The graph substrate.

A :class:`Graph` is immutable: every vertex ``v`` in ``range(n)`` has an
adjacency bit mask, and an ``active`` mask tells which vertices are alive.
Deleting vertices produces a *view* (same adjacency, smaller active mask),
so surviving vertices always keep their original id. Merging two vertices
is the only operation that builds new adjacency masks.

Vertex sets are accepted as any iterable of ids and returned as
``frozenset``; internally everything is a Python ``int`` used as a bit set,
which grows past a machine word for free.
"""

from collections import deque
import typing as T

VertexId = int
VertexSet = T.FrozenSet[VertexId]


class GraphError(ValueError):
    """An operation was asked something the graph cannot answer."""


class InvalidPathError(GraphError):
    """A vertex sequence is not an induced path where one is required."""


def bits(mask: int) -> T.Iterator[VertexId]:
    """Iterate the ids of a bit set in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: T.Iterable[VertexId]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple loopless undirected graph over ids ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_active")

    def __init__(self, n: int, adjacency: T.Sequence[int], active: int) -> None:
        self._n = n
        self._adj = tuple(adjacency)
        self._active = active

    @property
    def n(self) -> int:
        """Size of the id space (active or not)."""
        return self._n

    @property
    def active(self) -> int:
        """Bit set of the live vertices."""
        return self._active

    @property
    def adjacency(self) -> T.Tuple[int, ...]:
        return self._adj

    def vertices(self) -> T.List[VertexId]:
        return list(bits(self._active))

    def order(self) -> int:
        """Number of active vertices."""
        return popcount(self._active)

    def is_active(self, v: VertexId) -> bool:
        return 0 <= v < self._n and bool(self._active >> v & 1)

    def neighbor_mask(self, v: VertexId) -> int:
        return self._adj[v] & self._active

    def neighbors(self, v: VertexId) -> T.List[VertexId]:
        return list(bits(self.neighbor_mask(v)))

    def degree(self, v: VertexId) -> int:
        return popcount(self.neighbor_mask(v))

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return self.is_active(u) and self.is_active(v) and bool(self._adj[u] >> v & 1)

    def edges(self) -> T.List[T.Tuple[VertexId, VertexId]]:
        """Active edges ``(u, v)`` with ``u < v``, ascending."""
        out = []
        for u in bits(self._active):
            for v in bits(self._adj[u] & self._active & ~((2 << u) - 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in bits(self._active)) // 2

    def closed_mask(self, mask: int) -> int:
        """N[X] for a bit set X of active vertices."""
        out = mask
        for v in bits(mask):
            out |= self._adj[v]
        return out & self._active

    def restrict(self, mask: int) -> "Graph":
        """The view keeping only the active vertices in ``mask``."""
        return Graph(self._n, self._adj, self._active & mask)

    def _key(self) -> T.Tuple[int, int, T.Tuple[int, ...]]:
        return (
            self._n,
            self._active,
            tuple(self._adj[v] & self._active for v in range(self._n)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "Graph(n={}, active={}, edges={})".format(
            self._n, self.vertices(), self.edges()
        )


def build_graph(n: int, edges: T.Iterable[T.Tuple[VertexId, VertexId]]) -> Graph:
    """
    Build a graph on ``n`` vertices. Duplicate edges are collapsed,
    endpoints out of range and self-loops are rejected.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range [0, {n})")
        if u == v:
            raise GraphError(f"self-loop on vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, (1 << n) - 1)


def _check_active(G: Graph, mask: int) -> None:
    stray = mask & ~G.active
    if stray:
        raise GraphError(f"vertices {list(bits(stray))} are not active")


def _as_mask(G: Graph, X: T.Iterable[VertexId]) -> int:
    X = list(X)
    for v in X:
        if not G.is_active(v):
            raise GraphError(f"vertex {v} is not active")
    return mask_of(X)


def closed_neighborhood(G: Graph, X: T.Iterable[VertexId]) -> VertexSet:
    """N[X]: X together with every active neighbour of a member of X."""
    return frozenset(bits(G.closed_mask(_as_mask(G, X))))


def open_neighborhood(G: Graph, X: T.Iterable[VertexId]) -> VertexSet:
    """N(X) = N[X] minus X."""
    mask = _as_mask(G, X)
    return frozenset(bits(G.closed_mask(mask) & ~mask))


def delete_closed_neighborhood(G: Graph, X: T.Iterable[VertexId]) -> Graph:
    """The view G - N[X]."""
    return G.restrict(~G.closed_mask(_as_mask(G, X)))


def delete_vertices(G: Graph, X: T.Iterable[VertexId]) -> Graph:
    """The view G - X."""
    return G.restrict(~_as_mask(G, X))


def induced_subgraph(G: Graph, X: T.Iterable[VertexId]) -> Graph:
    """The view G[X]."""
    return G.restrict(_as_mask(G, X))


def merge_vertices(G: Graph, u1: VertexId, u2: VertexId) -> Graph:
    """
    Replace the adjacent vertices ``u1`` and ``u2`` by one vertex with
    neighbourhood N({u1, u2}). The merged vertex keeps the id ``u1``,
    ``u2`` is deactivated.
    """
    if not (G.is_active(u1) and G.is_active(u2)):
        raise GraphError(f"cannot merge {u1} and {u2}: both must be active")
    if not G.has_edge(u1, u2):
        raise GraphError(f"cannot merge {u1} and {u2}: they are not adjacent")
    b1, b2 = 1 << u1, 1 << u2
    adj = list(G.adjacency)
    for w in bits(adj[u2]):
        adj[w] &= ~b2
    merged = (adj[u1] | adj[u2]) & ~(b1 | b2)
    for w in bits(merged):
        adj[w] |= b1
    adj[u1] = merged
    adj[u2] = 0
    return Graph(G.n, adj, G.active & ~b2)


def is_induced_path(G: Graph, seq: T.Sequence[VertexId]) -> bool:
    """
    True iff ``seq`` lists distinct active vertices, consecutive ones are
    adjacent and no other pair is. The empty sequence is not a path.
    """
    if not seq or len(set(seq)) != len(seq):
        return False
    if not all(G.is_active(v) for v in seq):
        return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if G.has_edge(u, seq[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(G: Graph, seq: T.Sequence[VertexId]) -> bool:
    """Cyclic counterpart of :func:`is_induced_path`, at least 3 vertices."""
    size = len(seq)
    if size < 3 or len(set(seq)) != size:
        return False
    if not all(G.is_active(v) for v in seq):
        return False
    for i in range(size):
        for j in range(i + 1, size):
            consecutive = j == i + 1 or (i == 0 and j == size - 1)
            if G.has_edge(seq[i], seq[j]) != consecutive:
                return False
    return True


def dominates(G: Graph, X: T.Iterable[VertexId], Y: T.Iterable[VertexId]) -> bool:
    """Whether every vertex of Y outside X has a neighbour in X."""
    y_mask = _as_mask(G, Y)
    return y_mask & ~G.closed_mask(_as_mask(G, X)) == 0


def is_clique(G: Graph, X: T.Iterable[VertexId]) -> bool:
    mask = _as_mask(G, X)
    return all(mask & ~(1 << v) & ~G.adjacency[v] == 0 for v in bits(mask))


def is_simplicial(G: Graph, v: VertexId) -> bool:
    """A vertex is simplicial when its neighbourhood is a clique."""
    return is_clique(G, G.neighbors(v))


def is_connected(G: Graph, X: T.Iterable[VertexId]) -> bool:
    """Whether G[X] is connected; the empty set is not."""
    mask = _as_mask(G, X)
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= G.adjacency[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def connecting_path(
    G: Graph, x: VertexId, y: VertexId, forbidden: T.Iterable[VertexId] = ()
) -> T.Optional[T.List[VertexId]]:
    """
    A shortest ``x``-``y`` path in G - forbidden, or None. Neighbours are
    scanned in ascending order, so the answer is deterministic.
    """
    allowed = G.active & ~mask_of(forbidden)
    if not (allowed >> x & 1 and allowed >> y & 1):
        return None
    parent = {x: x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        if v == y:
            path = [y]
            while path[-1] != x:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in bits(G.adjacency[v] & allowed):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G next to H, with H's ids shifted by ``G.n``."""
    shift = G.n
    edges = G.edges() + [(u + shift, v + shift) for u, v in H.edges()]
    union = build_graph(G.n + H.n, edges)
    return union.restrict(G.active | H.active << shift)
