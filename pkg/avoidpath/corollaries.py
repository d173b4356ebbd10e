# -*- encoding: utf-8 -*-
"""
Consequences of the merging argument.

* Contracting a connected set X to a single vertex and running the refined
  search from it yields an avoidable P_k of G inside G - N[X].
* Applying that twice yields two non-adjacent avoidable P_k whenever two
  non-adjacent P_k exist.
* Two *disjoint* avoidable P_k need not exist when two disjoint P_k do: an
  odd cycle on 2k - 1 vertices plus a vertex adjacent to two consecutive
  cycle vertices is a counterexample for every k >= 3.
"""

from collections import deque
import itertools
import logging
import typing as T

from avoidpath.avoidability import enumerate_avoidable_paths
from avoidpath.graph import (
    Graph,
    GraphError,
    VertexId,
    bits,
    build_graph,
    delete_closed_neighborhood,
    is_connected,
    mask_of,
    merge_vertices,
)
from avoidpath.paths import Path, enumerate_induced_paths, find_induced_path
from avoidpath.solver import SolveResult, Solver

log = logging.getLogger(__name__)

PathPair = T.Tuple[Path, Path]


class DisjointReport(T.NamedTuple):
    has_two_disjoint_pk: bool
    has_two_disjoint_avoidable: bool
    pk_pair: T.Optional[PathPair] = None
    avoidable_pair: T.Optional[PathPair] = None


def contract_connected_set(
    G: Graph, X: T.Iterable[VertexId]
) -> T.Tuple[Graph, VertexId]:
    """
    Merge the vertices of the connected set ``X`` into its smallest member.
    Merges follow a breadth-first spanning tree of G[X] (neighbours in
    ascending order), deepest vertices first.
    """
    members = sorted(set(X))
    if not members:
        raise GraphError("cannot contract an empty set")
    if not is_connected(G, members):
        raise GraphError(f"{members} does not induce a connected subgraph")
    inside = mask_of(members)
    root = members[0]
    parent = {root: root}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in bits(G.adjacency[v] & inside):
            if w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    for v in reversed(order[1:]):
        G = merge_vertices(G, parent[v], v)
    return G, root


def find_avoidable_outside(G: Graph, X: T.Iterable[VertexId], k: int) -> SolveResult:
    """An avoidable P_k of ``G`` inside G - N[X], or a proof that none exists."""
    solver = Solver(k)
    contracted, root = contract_connected_set(G, X)
    outcome = solver.find_avoidable_path_refined(contracted, root)
    return SolveResult(outcome, solver.stats)


def find_two_nonadjacent_avoidable(G: Graph, k: int) -> T.Optional[PathPair]:
    """
    Two avoidable P_k with no edge and no vertex between them, or None when
    ``G`` does not even hold two non-adjacent P_k.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    for first in enumerate_induced_paths(G, k):
        if find_induced_path(delete_closed_neighborhood(G, first), k) is not None:
            break
    else:
        return None
    second = find_avoidable_outside(G, first, k).path
    if second is None:
        raise RuntimeError(f"no avoidable P_{k} found outside N[{list(first)}]")
    first = find_avoidable_outside(G, second, k).path
    if first is None:
        raise RuntimeError(f"no avoidable P_{k} found outside N[{list(second)}]")
    log.debug("non-adjacent avoidable pair %s / %s", first, second)
    return first, second


def _disjoint_pair(paths: T.Sequence[Path]) -> T.Optional[PathPair]:
    masks = [mask_of(p) for p in paths]
    for i, j in itertools.combinations(range(len(paths)), 2):
        if masks[i] & masks[j] == 0:
            return paths[i], paths[j]
    return None


def disjoint_report(G: Graph, k: int) -> DisjointReport:
    """Brute-force answer to: two disjoint P_k, and two disjoint avoidable ones?"""
    pk_pair = _disjoint_pair(list(enumerate_induced_paths(G, k)))
    avoidable_pair = _disjoint_pair(list(enumerate_avoidable_paths(G, k)))
    return DisjointReport(
        pk_pair is not None, avoidable_pair is not None, pk_pair, avoidable_pair
    )


def _check_counterexample_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"the counterexample family starts at k = 3, got {k}")


def counterexample_graph(k: int) -> Graph:
    """
    Cycle c_0 .. c_{2k-2} (ids 0 .. 2k-2) plus an apex (id 2k-1) adjacent to
    c_0 and c_1.
    """
    _check_counterexample_k(k)
    size = 2 * k - 1
    apex = size
    edges = [(i, (i + 1) % size) for i in range(size)]
    edges += [(0, apex), (1, apex)]
    return build_graph(size + 1, edges)


def triangle(k: int) -> T.Tuple[VertexId, VertexId, VertexId]:
    """The ids (c_0, c_1, apex) of the only triangle of the family."""
    _check_counterexample_k(k)
    return 0, 1, 2 * k - 1


def verify_counterexample(k: int) -> DisjointReport:
    """Expected answer: two disjoint P_k, but no two disjoint avoidable P_k."""
    report = disjoint_report(counterexample_graph(k), k)
    log.info(
        "k=%d: two disjoint P_k=%s, two disjoint avoidable P_k=%s",
        k,
        report.has_two_disjoint_pk,
        report.has_two_disjoint_avoidable,
    )
    return report
