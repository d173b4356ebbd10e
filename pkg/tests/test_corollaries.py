# -*- encoding: utf-8 -*-
"""Tests for the corollary procedures and the counterexample family."""

import itertools

import pytest

from avoidpath.avoidability import check_avoidable, enumerate_avoidable_paths
from avoidpath.corollaries import (
    DisjointReport,
    contract_connected_set,
    counterexample_graph,
    disjoint_report,
    find_avoidable_outside,
    find_two_nonadjacent_avoidable,
    triangle,
    verify_counterexample,
)
from avoidpath.generators import (
    all_labeled_graphs,
    make_complete,
    make_cycle,
    make_path,
)
from avoidpath.graph import (
    GraphError,
    build_graph,
    closed_neighborhood,
    disjoint_union,
    is_clique,
    is_connected,
    is_induced_cycle,
    mask_of,
)
from avoidpath.paths import enumerate_induced_paths, find_induced_path


def test_contract_single_vertex() -> None:
    G = make_cycle(5)
    H, root = contract_connected_set(G, [3])
    assert (H, root) == (G, 3)


def test_contract_triangle() -> None:
    H, root = contract_connected_set(make_complete(3), [0, 1, 2])
    assert root == 0
    assert H.vertices() == [0]
    assert H.edges() == []


def test_contract_arc_of_cycle() -> None:
    H, root = contract_connected_set(make_cycle(5), [2, 0, 1])
    assert root == 0
    assert H.vertices() == [0, 3, 4]
    assert is_induced_cycle(H, [0, 3, 4])


@pytest.mark.parametrize("X", [[], [0, 2]])
def test_contract_errors(X: list) -> None:
    with pytest.raises(GraphError):
        contract_connected_set(make_cycle(5), X)


def test_avoidable_outside_edge() -> None:
    G = make_cycle(8)
    result = find_avoidable_outside(G, [0, 1], 2)
    assert set(result.path) <= {3, 4, 5, 6}
    assert check_avoidable(G, result.path).avoidable


def test_avoidable_outside_dominating_set() -> None:
    result = find_avoidable_outside(make_path(3), [1], 1)
    assert result.is_pk_free


@pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_avoidable_outside_exhaustive(n: int) -> None:
    """Every connected set of every graph on n vertices."""
    for G in all_labeled_graphs(n):
        for size in range(1, n + 1):
            for X in itertools.combinations(range(n), size):
                if not is_connected(G, X):
                    continue
                near = closed_neighborhood(G, X)
                rest = G.restrict(~mask_of(near))
                for k in range(1, 4):
                    result = find_avoidable_outside(G, X, k)
                    if result.is_pk_free:
                        assert find_induced_path(rest, k) is None
                    else:
                        assert not near & set(result.path)
                        assert check_avoidable(G, result.path).avoidable


def _non_adjacent(G, p, q) -> bool:
    return not set(p) & set(q) and not any(G.has_edge(u, v) for u in p for v in q)


def test_two_copies_of_path() -> None:
    G = disjoint_union(make_path(3), make_path(3))
    assert find_two_nonadjacent_avoidable(G, 3) == ((0, 1, 2), (3, 4, 5))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_complete_graph_has_no_pair(k: int) -> None:
    assert find_two_nonadjacent_avoidable(make_complete(6), k) is None


@pytest.mark.parametrize("k", range(1, 6))
def test_pair_on_even_cycle(k: int) -> None:
    G = make_cycle(2 * k + 2)
    first, second = find_two_nonadjacent_avoidable(G, k)
    assert _non_adjacent(G, first, second)
    assert check_avoidable(G, first).avoidable
    assert check_avoidable(G, second).avoidable


@pytest.mark.parametrize(
    "n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)]
)
def test_pair_exhaustive(n: int) -> None:
    """A non-adjacent avoidable pair exists iff a non-adjacent P_k pair does."""
    for G in all_labeled_graphs(n):
        for k in range(1, 4):
            pair = find_two_nonadjacent_avoidable(G, k)
            paths = list(enumerate_induced_paths(G, k))
            exists = any(_non_adjacent(G, p, q) for p in paths for q in paths)
            assert (pair is not None) == exists
            if pair is not None:
                assert _non_adjacent(G, *pair)
                assert all(check_avoidable(G, p).avoidable for p in pair)


def test_pair_invalid_k() -> None:
    with pytest.raises(ValueError):
        find_two_nonadjacent_avoidable(make_cycle(5), 0)


@pytest.mark.parametrize("k,n,m", [[3, 6, 7], [4, 8, 9], [5, 10, 11]])
def test_counterexample_shape(k: int, n: int, m: int) -> None:
    G = counterexample_graph(k)
    assert (G.n, G.edge_count()) == (n, m)
    a, b, c = triangle(k)
    assert is_clique(G, [a, b, c])
    triangles = [t for t in itertools.combinations(range(n), 3) if is_clique(G, t)]
    assert triangles == [(0, 1, n - 1)]


@pytest.mark.parametrize("k", [1, 2])
def test_counterexample_range(k: int) -> None:
    with pytest.raises(ValueError):
        counterexample_graph(k)
    with pytest.raises(ValueError):
        triangle(k)


@pytest.mark.parametrize(
    "k", [3, 4, pytest.param(5, marks=pytest.mark.slow)]
)
def test_verify_counterexample(k: int) -> None:
    report = verify_counterexample(k)
    assert report.has_two_disjoint_pk
    assert not report.has_two_disjoint_avoidable
    assert report.avoidable_pair is None
    # two disjoint P_k always split the 2k vertices
    first, second = report.pk_pair
    assert set(first) | set(second) == set(range(2 * k))


@pytest.mark.parametrize("k", [3, 4])
def test_counterexample_avoidable_paths(k: int) -> None:
    G = counterexample_graph(k)
    avoidable = list(enumerate_avoidable_paths(G, k))
    assert avoidable
    assert all(set(p) & set(q) for p, q in itertools.combinations(avoidable, 2))


def test_disjoint_report_on_long_path() -> None:
    G = make_path(6)
    assert disjoint_report(G, 3) == DisjointReport(
        True, True, ((0, 1, 2), (3, 4, 5)), ((0, 1, 2), (3, 4, 5))
    )
    assert disjoint_report(build_graph(3, []), 2) == DisjointReport(False, False)
