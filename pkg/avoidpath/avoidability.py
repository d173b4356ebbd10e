# -*- encoding: utf-8 -*-
"""
Avoidability of induced paths.

An *extension* of an induced path P is an induced path xPy. It is *failing*
when no induced cycle contains it, and P is *avoidable* when it has no
failing extension (a path without extensions is avoidable by vacuity).

Whether xPy lies on an induced cycle is a reachability question: it does
exactly when x and y are joined by a path that stays outside N[P]. A
shortest such path has no chords, so it closes an induced cycle with xPy.
:func:`brute_force_is_failing` answers the same question from the list of
all induced cycles and is kept as an independent oracle.
"""

import functools
import itertools
import logging
import typing as T

from avoidpath.graph import (
    Graph,
    InvalidPathError,
    VertexId,
    bits,
    connecting_path,
    is_induced_path,
    mask_of,
    popcount,
)
from avoidpath.paths import Path, enumerate_induced_paths

log = logging.getLogger(__name__)

Cycle = T.Tuple[VertexId, ...]


class Extension(T.NamedTuple):
    x: VertexId
    core: Path
    y: VertexId

    @property
    def vertices(self) -> Path:
        return (self.x,) + tuple(self.core) + (self.y,)


class Verdict(T.NamedTuple):
    """
    Outcome of :func:`check_avoidable`.

    When ``avoidable`` is true, ``cycles`` pairs every extension with an
    induced cycle containing it (empty for a simplicial path); otherwise
    ``failing`` is the first failing extension in enumeration order.
    """

    path: Path
    avoidable: bool
    cycles: T.Tuple[T.Tuple[Extension, Cycle], ...] = ()
    failing: T.Optional[Extension] = None


def _require_induced(G: Graph, P: T.Sequence[VertexId]) -> None:
    if not is_induced_path(G, P):
        raise InvalidPathError(f"{list(P)} is not an induced path of the graph")


def _require_extension(G: Graph, ext: Extension) -> None:
    if ext.x == ext.y or not is_induced_path(G, ext.vertices):
        raise InvalidPathError(f"{list(ext.vertices)} is not an extension")


def enumerate_extensions(G: Graph, P: T.Sequence[VertexId]) -> T.List[Extension]:
    """
    Every extension of the induced path ``P``. ``x`` attaches to ``P[0]`` and
    ``y`` to ``P[-1]``; for a single vertex the pair is reported with x < y.
    """
    _require_induced(G, P)
    core = tuple(P)
    inner = mask_of(core)
    for v in core[1:-1]:
        inner |= G.adjacency[v] | 1 << v
    if len(core) == 1:
        # both ends see the whole of N(v)
        ends = list(bits(G.neighbor_mask(core[0])))
        return [
            Extension(x, core, y)
            for x, y in itertools.combinations(ends, 2)
            if not G.has_edge(x, y)
        ]
    head, tail = core[0], core[-1]
    # x sees head only, y sees tail only
    left = G.neighbor_mask(head) & ~inner & ~G.adjacency[tail] & ~(1 << tail)
    right = G.neighbor_mask(tail) & ~inner & ~G.adjacency[head] & ~(1 << head)
    return [
        Extension(x, core, y)
        for x in bits(left)
        for y in bits(right)
        if x != y and not G.has_edge(x, y)
    ]


def find_completing_cycle(G: Graph, ext: Extension) -> T.Optional[Cycle]:
    """An induced cycle of ``G`` containing ``ext``, or None when it is failing."""
    _require_extension(G, ext)
    inner = 0
    for v in ext.core:
        inner |= G.adjacency[v] | 1 << v
    inner &= ~(1 << ext.x | 1 << ext.y)
    connector = connecting_path(G, ext.x, ext.y, bits(inner))
    if connector is None:
        return None
    return ext.vertices + tuple(reversed(connector[1:-1]))


def is_failing(G: Graph, ext: Extension) -> bool:
    return find_completing_cycle(G, ext) is None


@functools.lru_cache(maxsize=64)
def induced_cycles(G: Graph) -> T.Tuple[Cycle, ...]:
    """
    Every induced cycle of ``G``, found by testing each vertex subset of size
    at least three. Exponential, meant for small graphs only.
    """
    out = []
    verts = G.vertices()
    for size in range(3, len(verts) + 1):
        for subset in itertools.combinations(verts, size):
            mask = mask_of(subset)
            if any(popcount(G.adjacency[v] & mask) != 2 for v in subset):
                continue
            cycle = [subset[0]]
            prev = None
            while True:
                step = [w for w in bits(G.adjacency[cycle[-1]] & mask) if w != prev]
                nxt = step[0]
                if nxt == subset[0]:
                    break
                prev = cycle[-1]
                cycle.append(nxt)
            # a 2-regular subset with several components is not a cycle
            if len(cycle) == size:
                out.append(tuple(cycle))
    return tuple(out)


def contains_arc(cycle: Cycle, arc: Path) -> bool:
    """Whether ``arc`` runs along ``cycle`` consecutively, in either direction."""
    size = len(cycle)
    if len(arc) > size:
        return False
    for direction in (cycle, cycle[::-1]):
        for shift in range(size):
            if all(direction[(shift + i) % size] == v for i, v in enumerate(arc)):
                return True
    return False


def brute_force_is_failing(G: Graph, ext: Extension) -> bool:
    """Whether no induced cycle of ``G`` runs through ``ext`` consecutively."""
    arc = ext.vertices
    return not any(contains_arc(cycle, arc) for cycle in induced_cycles(G))


def check_avoidable(
    G: Graph, P: T.Sequence[VertexId], brute_force: bool = False
) -> Verdict:
    """
    Decide whether ``P`` is avoidable in ``G``, with a witness either way.
    With ``brute_force`` the cycles come from :func:`induced_cycles`.
    """
    cycles = []
    for ext in enumerate_extensions(G, P):
        if brute_force:
            cycle = next(
                (c for c in induced_cycles(G) if contains_arc(c, ext.vertices)), None
            )
        else:
            cycle = find_completing_cycle(G, ext)
        if cycle is None:
            log.debug("path %s fails on extension %s", list(P), list(ext.vertices))
            return Verdict(tuple(P), False, failing=ext)
        cycles.append((ext, cycle))
    return Verdict(tuple(P), True, cycles=tuple(cycles))


def is_simplicial_path(G: Graph, P: T.Sequence[VertexId]) -> bool:
    """An induced path with no extension at all."""
    return not enumerate_extensions(G, P)


def enumerate_avoidable_paths(G: Graph, k: int) -> T.Iterator[Path]:
    """The avoidable P_k of ``G``, canonical and in lexicographic order."""
    for path in enumerate_induced_paths(G, k):
        if check_avoidable(G, path).avoidable:
            yield path


def _on_some_cycle(G: Graph, arc: T.Sequence[VertexId]) -> bool:
    return any(contains_arc(c, tuple(arc)) for c in induced_cycles(G))


def is_avoidable_vertex(G: Graph, v: VertexId) -> bool:
    """
    Every induced path on three vertices with middle vertex ``v`` is
    contained in an induced cycle.
    """
    nbrs = G.neighbors(v)
    return all(
        G.has_edge(a, b) or _on_some_cycle(G, (a, v, b))
        for a, b in itertools.combinations(nbrs, 2)
    )


def is_avoidable_edge(G: Graph, u: VertexId, v: VertexId) -> bool:
    """
    Every induced path on four vertices with middle edge ``uv`` is contained
    in an induced cycle.
    """
    if not G.has_edge(u, v):
        raise InvalidPathError(f"({u}, {v}) is not an edge")
    for a in G.neighbors(u):
        for b in G.neighbors(v):
            quad = (a, u, v, b)
            if is_induced_path(G, quad) and not _on_some_cycle(G, quad):
                return False
    return True
