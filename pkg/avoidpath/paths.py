# -*- encoding: utf-8 -*-
"""
Search for induced paths on k vertices.

The search grows a partial induced path from its first vertex: a candidate
must be a neighbour of the tip and must not touch the closed neighbourhood
of the other path vertices. Starting vertices and candidates are scanned in
ascending order, hence paths come out in lexicographic order and only the
canonical orientation (first id smaller than last id) is emitted.
"""

import typing as T

from avoidpath.graph import Graph, VertexId, bits, popcount

Path = T.Tuple[VertexId, ...]


def canonical(seq: T.Sequence[VertexId]) -> Path:
    """Orient a path so that its first id is smaller than its last one."""
    path = tuple(seq)
    if len(path) >= 2 and path[0] > path[-1]:
        return path[::-1]
    return path


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def _extend(
    G: Graph, path: T.List[VertexId], blocked: int, k: int
) -> T.Iterator[Path]:
    tip = path[-1]
    if len(path) == k:
        if path[0] < tip:
            yield tuple(path)
        return
    # blocked holds N[v] for every path vertex but the tip
    candidates = G.neighbor_mask(tip) & ~blocked
    tip_closed = G.adjacency[tip] | 1 << tip
    for w in bits(candidates):
        if len(path) + 1 == k and w < path[0]:
            continue
        path.append(w)
        yield from _extend(G, path, blocked | tip_closed, k)
        path.pop()


def enumerate_induced_paths(G: Graph, k: int) -> T.Iterator[Path]:
    """
    Lazily yield every induced P_k of ``G`` once, canonically oriented, in
    ascending lexicographic order.
    """
    _check_k(k)
    if k > popcount(G.active):
        return
    for start in bits(G.active):
        if k == 1:
            yield (start,)
            continue
        yield from _extend(G, [start], 0, k)


def find_induced_path(G: Graph, k: int) -> T.Optional[Path]:
    """The lexicographically least induced P_k, or None when G is P_k-free."""
    return next(enumerate_induced_paths(G, k), None)


def is_pk_free(G: Graph, k: int) -> bool:
    return find_induced_path(G, k) is None
