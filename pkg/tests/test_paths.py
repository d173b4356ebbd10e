# -*- encoding: utf-8 -*-
"""Tests for the induced path search."""

import itertools

from hypothesis import given
import pytest

from avoidpath.generators import make_complete, make_cycle, make_path, make_star
from avoidpath.graph import build_graph, delete_vertices, is_induced_path
from avoidpath.paths import (
    canonical,
    enumerate_induced_paths,
    find_induced_path,
    is_pk_free,
)

from .strategies import graphs


@pytest.mark.parametrize(
    "seq,expected",
    [[[3, 1, 0], (0, 1, 3)], [[0, 1, 3], (0, 1, 3)], [[4], (4,)], [[], ()]],
)
def test_canonical(seq: list, expected: tuple) -> None:
    assert canonical(seq) == expected


@pytest.mark.parametrize(
    "G,k,expected",
    [
        [make_complete(4), 3, None],
        [make_cycle(5), 4, (0, 1, 2, 3)],
        [make_cycle(5), 5, None],
        [make_path(4), 4, (0, 1, 2, 3)],
        [make_star(4), 3, (1, 0, 2)],
        [make_cycle(5), 1, (0,)],
    ],
)
def test_find_induced_path(G, k: int, expected) -> None:
    assert find_induced_path(G, k) == expected


def test_enumerate_path_edges() -> None:
    assert list(enumerate_induced_paths(make_path(4), 2)) == [
        (0, 1),
        (1, 2),
        (2, 3),
    ]


def test_enumerate_cycle_p3() -> None:
    """One P_3 per middle vertex."""
    paths = list(enumerate_induced_paths(make_cycle(5), 3))
    assert len(paths) == 5
    assert sorted(p[1] for p in paths) == [0, 1, 2, 3, 4]
    assert paths == sorted(paths)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumerate_empty_graph(k: int) -> None:
    assert list(enumerate_induced_paths(build_graph(0, []), k)) == []


def test_enumerate_skips_inactive_vertices() -> None:
    G = delete_vertices(make_cycle(6), [0])
    assert list(enumerate_induced_paths(G, 5)) == [(1, 2, 3, 4, 5)]


@pytest.mark.parametrize("k", [0, -2])
def test_invalid_k(k: int) -> None:
    with pytest.raises(ValueError):
        find_induced_path(make_cycle(5), k)
    with pytest.raises(ValueError):
        list(enumerate_induced_paths(make_cycle(5), k))


def test_is_pk_free() -> None:
    assert is_pk_free(make_complete(5), 3)
    assert not is_pk_free(make_complete(5), 2)
    assert is_pk_free(make_cycle(6), 6)


@given(graphs(max_n=6))
def test_enumeration_matches_subsets(G) -> None:
    """Every induced P_k is listed once, by checking all ordered k-tuples."""
    for k in range(1, G.order() + 2):
        expected = {
            canonical(seq)
            for seq in itertools.permutations(G.vertices(), k)
            if is_induced_path(G, seq)
        }
        found = list(enumerate_induced_paths(G, k))
        assert len(found) == len(set(found))
        assert set(found) == expected
        assert find_induced_path(G, k) == (found[0] if found else None)
        assert all(p[0] < p[-1] for p in found if k > 1)


@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_path_count(n: int) -> None:
    """C_n holds exactly n induced P_k for every k < n."""
    for k in range(1, n):
        assert len(list(enumerate_induced_paths(make_cycle(n), k))) == n
    assert find_induced_path(make_cycle(n), n) is None
