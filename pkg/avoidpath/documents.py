# -*- encoding: utf-8 -*-
"""
Result documents.

Every command prints one JSON object (see ``docs/usage.rst`` for the
schema). Documents carry their own certificates: avoidable paths come with
one completing induced cycle per extension, failing extensions and P_k-free
claims are stated explicitly, so :func:`revalidate` can check a document
against its input graph without running the solver.
"""

import json
import typing as T

from avoidpath.avoidability import (
    Extension,
    Verdict,
    check_avoidable,
    contains_arc,
    enumerate_extensions,
    find_completing_cycle,
)
from avoidpath.corollaries import DisjointReport, PathPair
from avoidpath.formats import digest
from avoidpath.graph import (
    Graph,
    InvalidPathError,
    delete_closed_neighborhood,
    is_induced_cycle,
    is_induced_path,
    mask_of,
)
from avoidpath.paths import find_induced_path
from avoidpath.solver import PkFree, SolveResult

Document = T.Dict[str, T.Any]


def dumps(doc: T.Union[Document, T.List[Document]]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _base(command: str, G: T.Optional[Graph], k: T.Optional[int]) -> Document:
    doc = {"command": command, "k": k}  # type: Document
    if G is not None:
        doc["input_digest"] = digest(G)
        doc["n"] = G.n
    return doc


def certificate(verdict: Verdict) -> Document:
    """The witness part of a verdict."""
    if verdict.avoidable:
        return {
            "no_extensions": not verdict.cycles,
            "extensions": [
                {"extension": list(ext.vertices), "cycle": list(cycle)}
                for ext, cycle in verdict.cycles
            ],
        }
    return {"failing_extension": list(verdict.failing.vertices)}


def find_document(
    G: Graph, k: int, result: SolveResult, refined: T.Optional[int] = None
) -> Document:
    doc = _base("find", G, k)
    doc["refined"] = refined
    doc["stats"] = result.stats.as_dict()
    if isinstance(result.outcome, PkFree):
        doc["outcome"] = "pk_free"
        doc["certified_vertices"] = sorted(result.outcome.vertices)
        return doc
    doc["outcome"] = "avoidable_path"
    doc["path"] = list(result.path)
    doc["certificate"] = certificate(check_avoidable(G, result.path))
    return doc


def verify_document(G: Graph, k: int, path: T.Sequence[int]) -> Document:
    doc = _base("verify", G, k)
    doc["path"] = list(path)
    if len(path) != k or not is_induced_path(G, path):
        doc["outcome"] = "not_induced"
        return doc
    verdict = check_avoidable(G, path)
    doc["outcome"] = "avoidable" if verdict.avoidable else "not_avoidable"
    doc["certificate"] = certificate(verdict)
    return doc


def pair_document(G: Graph, k: int, pair: T.Optional[PathPair]) -> Document:
    doc = _base("two-nonadjacent", G, k)
    if pair is None:
        doc["outcome"] = "no_pair"
        return doc
    doc["outcome"] = "avoidable_pair"
    doc["pair"] = [list(p) for p in pair]
    doc["certificates"] = [certificate(check_avoidable(G, p)) for p in pair]
    return doc


def report_document(
    G: Graph, k: int, report: T.Optional[DisjointReport]
) -> Document:
    doc = _base("counterexample", G, k)
    doc["outcome"] = "report"
    doc["graph"] = {"n": G.n, "edges": [list(e) for e in G.edges()]}
    if report is not None:
        doc["report"] = {
            "has_two_disjoint_pk": report.has_two_disjoint_pk,
            "has_two_disjoint_avoidable": report.has_two_disjoint_avoidable,
            "pk_pair": _pair(report.pk_pair),
            "avoidable_pair": _pair(report.avoidable_pair),
        }
    return doc


def _pair(pair: T.Optional[PathPair]) -> T.Optional[T.List[T.List[int]]]:
    return None if pair is None else [list(p) for p in pair]


def summary_document(command: str, k: T.Optional[int], body: Document) -> Document:
    doc = _base(command, None, k)
    doc["outcome"] = "report"
    doc.update(body)
    return doc


def _check_certificate(
    G: Graph, path: T.Sequence[int], cert: Document, claim_avoidable: bool
) -> T.List[str]:
    problems = []
    try:
        extensions = {e.vertices for e in enumerate_extensions(G, path)}
    except InvalidPathError:
        return [f"{list(path)} is not an induced path"]
    if not claim_avoidable:
        failing = tuple(cert.get("failing_extension") or ())
        if failing not in extensions:
            return [f"{list(failing)} is not an extension of {list(path)}"]
        ext = Extension(failing[0], failing[1:-1], failing[-1])
        if find_completing_cycle(G, ext) is not None:
            problems.append(f"extension {list(failing)} is not failing")
        return problems
    listed = {}
    for entry in cert.get("extensions", []):
        listed[tuple(entry["extension"])] = tuple(entry["cycle"])
    if set(listed) != extensions:
        problems.append(f"extension list of {list(path)} is incomplete or wrong")
    if cert.get("no_extensions") != (not extensions):
        problems.append(f"no_extensions flag of {list(path)} is wrong")
    for ext, cycle in listed.items():
        if not is_induced_cycle(G, cycle):
            problems.append(f"{list(cycle)} is not an induced cycle")
        elif not contains_arc(cycle, ext):
            problems.append(f"cycle {list(cycle)} does not contain {list(ext)}")
    return problems


def _check_path(G: Graph, k: int, path: T.Sequence[int]) -> T.List[str]:
    if len(path) != k or not is_induced_path(G, path):
        return [f"{list(path)} is not an induced P_{k}"]
    return []


def _check_pair(G: Graph, k: int, pair: T.Sequence[T.Sequence[int]]) -> T.List[str]:
    problems = []
    for path in pair:
        problems += _check_path(G, k, path)
    first, second = (mask_of(p) for p in pair)
    if first & second:
        problems.append("the two paths share a vertex")
    return problems


def _search_space(G: Graph, refined: T.Optional[int]) -> Graph:
    if refined is None:
        return G
    return delete_closed_neighborhood(G, [refined])


def revalidate(G: Graph, doc: Document) -> T.List[str]:
    """Problems found re-checking the witnesses of ``doc``; empty when sound."""
    problems = []  # type: T.List[str]
    if "input_digest" in doc and doc["input_digest"] != digest(G):
        problems.append("input digest does not match the graph")
    k = doc.get("k")
    outcome = doc.get("outcome")
    if outcome == "avoidable_path" or outcome in ("avoidable", "not_avoidable"):
        path = doc["path"]
        problems += _check_path(G, k, path)
        if not problems:
            problems += _check_certificate(
                G, path, doc["certificate"], outcome != "not_avoidable"
            )
        space = _search_space(G, doc.get("refined"))
        if any(not space.is_active(v) for v in path):
            problems.append(f"{path} meets N[{doc['refined']}]")
    elif outcome == "pk_free":
        view = G.restrict(mask_of(doc["certified_vertices"]))
        witness = find_induced_path(view, k)
        if witness is not None:
            problems.append(f"{list(witness)} is an induced P_{k}")
        if view.active != _search_space(G, doc.get("refined")).active:
            problems.append("certified vertices do not match the searched graph")
    elif outcome == "not_induced":
        if not _check_path(G, k, doc["path"]):
            problems.append(f"{doc['path']} is an induced P_{k}")
    elif outcome == "avoidable_pair":
        pair = doc["pair"]
        problems += _check_pair(G, k, pair)
        first, second = pair
        if any(G.has_edge(u, v) for u in first for v in second):
            problems.append("the two paths are adjacent")
        for path, cert in zip(pair, doc["certificates"]):
            problems += _check_certificate(G, path, cert, True)
    elif outcome == "report" and "report" in doc:
        report = doc["report"]
        for key in ("pk_pair", "avoidable_pair"):
            if report.get(key) is not None:
                problems += _check_pair(G, k, report[key])
        if report.get("avoidable_pair") is not None:
            for path in report["avoidable_pair"]:
                if not check_avoidable(G, path).avoidable:
                    problems.append(f"{path} is not avoidable")
    return problems
