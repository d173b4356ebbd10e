# -*- encoding: utf-8 -*-
"""
Graph families, seeded random graphs and the enumeration of all labelled
graphs on a few vertices.

Random graphs are drawn from :class:`random.Random` seeded with the given
64-bit seed (Mersenne Twister, stable across Python versions for integer
seeds). :func:`gnp` draws one ``random()`` per vertex pair in the order
(0,1), (0,2), ..., (0,n-1), (1,2), ... and keeps the pair when the draw is
below ``p``.
"""

import itertools
import random
import typing as T

from avoidpath.graph import Graph, bits, build_graph

MAX_LABELED_N = 7
SEED_LIMIT = 1 << 64


def _check_seed(seed: int) -> None:
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"a path needs at least one vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least three vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"a complete graph needs at least one vertex, got {n}")
    return build_graph(n, itertools.combinations(range(n), 2))


def make_star(n: int) -> Graph:
    """Centre 0 joined to the ``n - 1`` leaves."""
    if n < 1:
        raise ValueError(f"a star needs at least one vertex, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    _check_seed(seed)
    rng = random.Random(seed)
    edges = [
        pair for pair in itertools.combinations(range(n), 2) if rng.random() < p
    ]
    return build_graph(n, edges)


def random_chordal(n: int, seed: int) -> Graph:
    """
    Chordal graph built by reverse perfect elimination: each new vertex is
    joined to a random clique of the graph built so far.
    """
    if n < 1:
        raise ValueError(f"a chordal graph needs at least one vertex, got {n}")
    _check_seed(seed)
    rng = random.Random(seed)
    adj = [0] * n
    edges = []
    for new in range(1, n):
        anchor = rng.randrange(new)
        clique = 1 << anchor
        candidates = list(bits(adj[anchor]))
        rng.shuffle(candidates)
        for w in candidates:
            if clique & ~adj[w] == 0 and rng.random() < 0.5:
                clique |= 1 << w
        for w in bits(clique):
            adj[w] |= 1 << new
            adj[new] |= 1 << w
            edges.append((w, new))
    return build_graph(n, edges)


def is_chordal(G: Graph) -> bool:
    """
    Whether ``G`` has a perfect elimination ordering, found by repeatedly
    removing a simplicial vertex.
    """
    left = G.active
    while left:
        for v in bits(left):
            nbrs = G.adjacency[v] & left
            if all(nbrs & ~(1 << w) & ~G.adjacency[w] == 0 for w in bits(nbrs)):
                left &= ~(1 << v)
                break
        else:
            return False
    return True


def _from_mask(
    n: int, pairs: T.Sequence[T.Tuple[int, int]], index: int
) -> Graph:
    return build_graph(n, [pair for i, pair in enumerate(pairs) if index >> i & 1])


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def labeled_graph(n: int, index: int) -> Graph:
    """
    The ``index``-th labelled graph on ``n`` vertices: bit ``i`` of the index
    selects the ``i``-th pair in the order (0,1), (0,2), ..., (1,2), ...
    """
    pairs = list(itertools.combinations(range(n), 2))
    if not 0 <= index < 1 << len(pairs):
        raise ValueError(f"index {index} out of range for n={n}")
    return _from_mask(n, pairs, index)


def all_labeled_graphs(n: int) -> T.Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in edge-mask order."""
    if not 0 <= n <= MAX_LABELED_N:
        raise ValueError(
            f"labelled enumeration is limited to n <= {MAX_LABELED_N}, got {n}"
        )
    pairs = list(itertools.combinations(range(n), 2))
    return (_from_mask(n, pairs, index) for index in range(1 << len(pairs)))


def make_family(name: str, n: int, seed: int = 0, p: float = 0.5) -> Graph:
    """Dispatch used by the benchmark command."""
    if name == "gnp":
        return gnp(n, p, seed)
    if name == "cycle":
        return make_cycle(n)
    if name == "chordal":
        return random_chordal(n, seed)
    raise ValueError(f"unknown graph family: {name}")

