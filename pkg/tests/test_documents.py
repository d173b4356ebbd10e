# -*- encoding: utf-8 -*-
"""Tests for result documents and their re-validation."""

import copy
import json

import pytest

from avoidpath import documents
from avoidpath.corollaries import (
    counterexample_graph,
    find_two_nonadjacent_avoidable,
    verify_counterexample,
)
from avoidpath.formats import digest
from avoidpath.generators import make_complete, make_cycle, make_path
from avoidpath.solver import find_avoidable_path, find_avoidable_path_refined


def test_find_document() -> None:
    G = make_cycle(7)
    doc = documents.find_document(G, 3, find_avoidable_path(G, 3))
    assert doc["command"] == "find"
    assert doc["outcome"] == "avoidable_path"
    assert doc["path"] == [3, 4, 5]
    assert doc["input_digest"] == digest(G)
    assert doc["certificate"] == {
        "no_extensions": False,
        "extensions": [
            {"extension": [2, 3, 4, 5, 6], "cycle": [2, 3, 4, 5, 6, 0, 1]}
        ],
    }
    assert documents.revalidate(G, doc) == []


def test_pk_free_document() -> None:
    G = make_complete(4)
    doc = documents.find_document(G, 3, find_avoidable_path(G, 3))
    assert doc["outcome"] == "pk_free"
    assert doc["certified_vertices"] == [0, 1, 2, 3]
    assert documents.revalidate(G, doc) == []


def test_refined_document() -> None:
    G = make_cycle(6)
    doc = documents.find_document(G, 2, find_avoidable_path_refined(G, 2, 0), 0)
    assert doc["refined"] == 0
    assert documents.revalidate(G, doc) == []
    doc["path"] = [5, 4]
    assert "[5, 4] meets N[0]" in documents.revalidate(G, doc)


def test_verify_document() -> None:
    G = counterexample_graph(3)
    doc = documents.verify_document(G, 3, [3, 4, 0])
    assert doc["outcome"] == "not_avoidable"
    assert doc["certificate"] == {"failing_extension": [2, 3, 4, 0, 5]}
    assert documents.revalidate(G, doc) == []

    doc = documents.verify_document(G, 3, [5, 1, 2])
    assert doc["outcome"] == "avoidable"
    assert doc["certificate"] == {"no_extensions": True, "extensions": []}
    assert documents.revalidate(G, doc) == []


@pytest.mark.parametrize("path", [[0, 1, 2, 3, 4], [0, 1], [0, 2, 3]])
def test_verify_not_induced(path: list) -> None:
    G = make_cycle(5)
    doc = documents.verify_document(G, 3, path)
    assert doc["outcome"] == "not_induced"
    assert "certificate" not in doc
    assert documents.revalidate(G, doc) == []


def test_pair_document() -> None:
    G = make_cycle(8)
    doc = documents.pair_document(G, 2, find_two_nonadjacent_avoidable(G, 2))
    assert doc["outcome"] == "avoidable_pair"
    assert len(doc["certificates"]) == 2
    assert documents.revalidate(G, doc) == []
    assert documents.pair_document(make_path(3), 2, None)["outcome"] == "no_pair"


def test_report_document() -> None:
    G = counterexample_graph(3)
    doc = documents.report_document(G, 3, verify_counterexample(3))
    assert doc["report"]["has_two_disjoint_pk"] is True
    assert doc["report"]["has_two_disjoint_avoidable"] is False
    assert doc["graph"]["edges"] == [list(e) for e in G.edges()]
    assert documents.revalidate(G, doc) == []


def test_tampered_documents() -> None:
    G = make_cycle(7)
    doc = documents.find_document(G, 3, find_avoidable_path(G, 3))

    wrong_path = copy.deepcopy(doc)
    wrong_path["path"] = [3, 4, 6]
    assert documents.revalidate(G, wrong_path) == ["[3, 4, 6] is not an induced P_3"]

    wrong_cycle = copy.deepcopy(doc)
    wrong_cycle["certificate"]["extensions"][0]["cycle"] = [2, 3, 4, 5, 6]
    assert documents.revalidate(G, wrong_cycle) == [
        "[2, 3, 4, 5, 6] is not an induced cycle"
    ]

    missing = copy.deepcopy(doc)
    missing["certificate"]["extensions"] = []
    assert documents.revalidate(G, missing) == [
        "extension list of [3, 4, 5] is incomplete or wrong"
    ]

    assert "input digest does not match the graph" in documents.revalidate(
        make_cycle(6), doc
    )

    wrong_claim = documents.find_document(
        make_complete(4), 3, find_avoidable_path(make_complete(4), 3)
    )
    wrong_claim["input_digest"] = digest(G)
    assert documents.revalidate(G, wrong_claim) == [
        "[0, 1, 2] is an induced P_3",
        "certified vertices do not match the searched graph",
    ]


def test_fake_failing_extension() -> None:
    G = make_cycle(6)
    doc = documents.verify_document(G, 2, [0, 1])
    doc["outcome"] = "not_avoidable"
    doc["certificate"] = {"failing_extension": [5, 0, 1, 2]}
    assert documents.revalidate(G, doc) == ["extension [5, 0, 1, 2] is not failing"]


def test_dumps_is_stable() -> None:
    doc = {"outcome": "report", "command": "x", "k": 1}
    text = documents.dumps(doc)
    assert json.loads(text) == doc
    assert text.index('"command"') < text.index('"k"') < text.index('"outcome"')
