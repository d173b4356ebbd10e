# -*- encoding: utf-8 -*-
"""
Constructive search for an avoidable induced path on k vertices.

``FindAvoidablePath(G, k)`` looks for a vertex ``u`` such that G - N[u]
still holds a P_k and hands over to the refined procedure; if there is none,
every P_k of G dominates V(G) and any P_k is avoidable.

``FindAvoidablePathRefined(G, k, u)`` looks for a neighbour ``v`` of ``u``
such that G - N[{u, v}] holds a P_k. If there is one, ``u`` and ``v`` are
merged and the search restarts on the smaller graph; otherwise every P_k of
G - N[u] dominates N(u) and an avoidable P_k of G - N[u] is avoidable in G.

The merged vertex keeps the id of ``u``, so the returned path never needs
translating back to the input graph: it avoids N[u] in the merged graph and
is therefore made of original vertices only.
"""

import logging
import typing as T

from avoidpath.avoidability import check_avoidable
from avoidpath.graph import (
    Graph,
    GraphError,
    VertexId,
    bits,
    delete_closed_neighborhood,
    is_induced_path,
    merge_vertices,
    open_neighborhood,
)
from avoidpath.paths import Path, find_induced_path

log = logging.getLogger(__name__)


class SolverInvariantError(RuntimeError):
    """A structural bound on the search was exceeded."""


class SolveStats:
    """Counters shadowing the cost recurrence of the two procedures."""

    __slots__ = ("merges", "refined_calls", "induced_path_calls", "max_depth")

    def __init__(self) -> None:
        self.merges = 0
        self.refined_calls = 0
        self.induced_path_calls = 0
        self.max_depth = 0

    def as_dict(self) -> T.Dict[str, int]:
        return {name: getattr(self, name) for name in self.__slots__}

    def check_bounds(self, n: int) -> None:
        """Raise if a counter went past what a graph on ``n`` vertices allows."""
        problems = []
        if self.merges > max(n - 1, 0):
            problems.append(f"merges={self.merges} > n-1={n - 1}")
        if self.refined_calls > n:
            problems.append(f"refined_calls={self.refined_calls} > n={n}")
        if self.max_depth > max(n, 1):
            problems.append(f"max_depth={self.max_depth} > n={n}")
        if problems:
            raise SolverInvariantError("; ".join(problems))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SolveStats):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self) -> str:
        return "SolveStats({})".format(
            ", ".join(f"{k}={v}" for k, v in self.as_dict().items())
        )


class AvoidablePath(T.NamedTuple):
    path: Path


class PkFree(T.NamedTuple):
    """The graph with active vertex set ``vertices`` holds no induced P_k."""

    vertices: T.FrozenSet[VertexId]


Outcome = T.Union[AvoidablePath, PkFree]


class SolveResult(T.NamedTuple):
    outcome: Outcome
    stats: SolveStats

    @property
    def path(self) -> T.Optional[Path]:
        if isinstance(self.outcome, AvoidablePath):
            return self.outcome.path
        return None

    @property
    def is_pk_free(self) -> bool:
        return isinstance(self.outcome, PkFree)


class Solver:
    """
    One search for a fixed ``k``. The object owns its counters, create a new
    one per solve.
    """

    def __init__(self, k: int) -> None:
        if k < 1:
            raise ValueError(f"k must be a positive integer, got {k}")
        self.k = k
        self.stats = SolveStats()
        self._depth = 0

    def _induced_path(self, G: Graph) -> T.Optional[Path]:
        self.stats.induced_path_calls += 1
        return find_induced_path(G, self.k)

    def find_avoidable_path(self, G: Graph) -> Outcome:
        self._depth += 1
        self.stats.max_depth = max(self.stats.max_depth, self._depth)
        try:
            for u in bits(G.active):
                if self._induced_path(delete_closed_neighborhood(G, [u])) is not None:
                    log.debug("G - N[%d] holds a P_%d, refining", u, self.k)
                    return self.find_avoidable_path_refined(G, u)
            # every P_k of G dominates V(G)
            path = self._induced_path(G)
            if path is None:
                return PkFree(frozenset(bits(G.active)))
            return AvoidablePath(path)
        finally:
            self._depth -= 1

    def find_avoidable_path_refined(self, G: Graph, u: VertexId) -> Outcome:
        if not G.is_active(u):
            raise GraphError(f"vertex {u} is not active")
        self.stats.refined_calls += 1
        while True:
            for v in sorted(open_neighborhood(G, [u])):
                outside = delete_closed_neighborhood(G, [u, v])
                if self._induced_path(outside) is not None:
                    log.debug("merging %d into %d", v, u)
                    G = merge_vertices(G, u, v)
                    self.stats.merges += 1
                    self.stats.refined_calls += 1
                    break
            else:
                # every P_k of G - N[u] dominates N(u)
                return self.find_avoidable_path(delete_closed_neighborhood(G, [u]))


def find_avoidable_path(G: Graph, k: int) -> SolveResult:
    """An avoidable P_k of ``G``, or a certificate that ``G`` is P_k-free."""
    solver = Solver(k)
    return SolveResult(solver.find_avoidable_path(G), solver.stats)


def find_avoidable_path_refined(G: Graph, k: int, u: VertexId) -> SolveResult:
    """
    An avoidable P_k of ``G`` inside G - N[u], or a proof that G - N[u] is
    P_k-free.
    """
    solver = Solver(k)
    return SolveResult(solver.find_avoidable_path_refined(G, u), solver.stats)


def solve_with_stats(G: Graph, k: int) -> SolveResult:
    """:func:`find_avoidable_path`, checking the counters against their bounds."""
    result = find_avoidable_path(G, k)
    result.stats.check_bounds(G.order())
    log.debug("solved k=%d on %d vertices: %r", k, G.order(), result.stats)
    return result


def check_basic_property(
    G: Graph, k: int, brute_force: bool = False
) -> T.Optional[str]:
    """
    Run the solver and confirm its answer independently: a returned path must
    be avoidable, a P_k-free answer must hold. Returns a description of the
    violation, or None.
    """
    result = solve_with_stats(G, k)
    return _check_outcome(G, k, result.outcome, G, brute_force)


def check_refined_property(
    G: Graph, k: int, u: VertexId, brute_force: bool = False
) -> T.Optional[str]:
    """Same as :func:`check_basic_property` for the refined procedure at ``u``."""
    result = find_avoidable_path_refined(G, k, u)
    result.stats.check_bounds(G.order())
    outside = delete_closed_neighborhood(G, [u])
    problem = _check_outcome(G, k, result.outcome, outside, brute_force)
    if problem is None and result.path is not None:
        if any(not outside.is_active(v) for v in result.path):
            problem = f"path {list(result.path)} meets N[{u}]"
    return problem


def _check_outcome(
    G: Graph, k: int, outcome: Outcome, certified: Graph, brute_force: bool
) -> T.Optional[str]:
    if isinstance(outcome, PkFree):
        witness = find_induced_path(certified, k)
        if witness is not None:
            return f"claimed P_{k}-free but {list(witness)} is an induced P_{k}"
        return None
    if len(outcome.path) != k or not is_induced_path(G, outcome.path):
        return f"{list(outcome.path)} is not an induced P_{k}"
    verdict = check_avoidable(G, outcome.path, brute_force)
    if not verdict.avoidable:
        return "path {} has failing extension {}".format(
            list(outcome.path), list(verdict.failing.vertices)
        )
    return None
