# -*- encoding: utf-8 -*-
"""
The command runners.

Each ``run_*`` function takes already-validated arguments and returns the
result document together with the exit status the command line must use.
"""

from concurrent.futures import ProcessPoolExecutor
import logging
import time
import typing as T

from avoidpath import documents
from avoidpath.corollaries import (
    counterexample_graph,
    find_two_nonadjacent_avoidable,
    verify_counterexample,
)
from avoidpath.documents import Document
from avoidpath.generators import (
    MAX_LABELED_N,
    labeled_graph,
    labeled_graph_count,
    make_family,
)
from avoidpath.graph import Graph
from avoidpath.log import setup_log, setup_worker_log
from avoidpath.solver import (
    SolverInvariantError,
    check_basic_property,
    check_refined_property,
    find_avoidable_path_refined,
    solve_with_stats,
)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_ABSENT = 3

Run = T.Tuple[Document, int]


def setup(config: T.Dict[T.Text, T.Any]) -> logging.Logger:
    """
    Setup the application.
    """
    return setup_log(config["log"])


def run_find(G: Graph, k: int, refined: T.Optional[int] = None) -> Run:
    if refined is None:
        result = solve_with_stats(G, k)
    else:
        result = find_avoidable_path_refined(G, k, refined)
        result.stats.check_bounds(G.order())
    doc = documents.find_document(G, k, result, refined)
    return doc, EXIT_ABSENT if result.is_pk_free else EXIT_OK


def run_verify(G: Graph, k: int, path: T.Sequence[int]) -> Run:
    doc = documents.verify_document(G, k, path)
    codes = {"avoidable": EXIT_OK, "not_avoidable": EXIT_ABSENT}
    return doc, codes.get(doc["outcome"], EXIT_USAGE)


def run_two_nonadjacent(G: Graph, k: int) -> Run:
    pair = find_two_nonadjacent_avoidable(G, k)
    doc = documents.pair_document(G, k, pair)
    return doc, EXIT_ABSENT if pair is None else EXIT_OK


def run_counterexample(k: int, verify: bool = False) -> Run:
    G = counterexample_graph(k)
    report = verify_counterexample(k) if verify else None
    doc = documents.report_document(G, k, report)
    if report is not None and (
        not report.has_two_disjoint_pk or report.has_two_disjoint_avoidable
    ):
        log.error("k=%d: the counterexample does not behave as expected", k)
        return doc, EXIT_VIOLATION
    return doc, EXIT_OK


class ChunkTask(T.NamedTuple):
    n: int
    start: int
    stop: int
    max_k: int
    refined: bool
    brute_force: bool


class ChunkResult(T.NamedTuple):
    n: int
    graphs: int
    checks: int
    violations: T.List[T.Dict[str, T.Any]]


def check_chunk(task: ChunkTask) -> ChunkResult:
    """Check the labelled graphs with index in ``[start, stop)``."""
    checks = 0
    violations = []
    for index in range(task.start, task.stop):
        G = labeled_graph(task.n, index)
        for k in range(1, min(task.max_k, task.n) + 1):
            targets = [None]  # type: T.List[T.Optional[int]]
            if task.refined:
                targets += G.vertices()
            for u in targets:
                checks += 1
                try:
                    if u is None:
                        problem = check_basic_property(G, k, task.brute_force)
                    else:
                        problem = check_refined_property(G, k, u, task.brute_force)
                except SolverInvariantError as e:
                    problem = str(e)
                if problem is not None:
                    violations.append(
                        {
                            "n": task.n,
                            "index": index,
                            "k": k,
                            "u": u,
                            "edges": [list(e) for e in G.edges()],
                            "problem": problem,
                        }
                    )
    return ChunkResult(task.n, task.stop - task.start, checks, violations)


def _tasks(
    max_n: int, max_k: int, chunk_size: int, refined: bool, brute_force: bool
) -> T.List[ChunkTask]:
    tasks = []
    for n in range(max_n + 1):
        total = labeled_graph_count(n)
        for start in range(0, total, chunk_size):
            stop = min(start + chunk_size, total)
            tasks.append(ChunkTask(n, start, stop, max_k, refined, brute_force))
    return tasks


def run_exhaustive(
    max_n: int,
    max_k: int,
    workers: int = 1,
    chunk_size: int = 4096,
    refined: bool = False,
    brute_force: bool = False,
    log_conf: T.Optional[T.Dict[T.Text, T.Any]] = None,
) -> Run:
    """
    Check the solver against the avoidability oracle on every labelled
    graph with at most ``max_n`` vertices. ``log_conf`` configures the
    logging of the worker processes.
    """
    if max_n > MAX_LABELED_N:
        raise ValueError(f"max-n is limited to {MAX_LABELED_N}, got {max_n}")
    tasks = _tasks(max_n, max_k, chunk_size, refined, brute_force)
    started = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=setup_worker_log, initargs=(log_conf,)
        ) as pool:
            results = list(pool.map(check_chunk, tasks))
    else:
        results = [check_chunk(task) for task in tasks]
    per_n = {}  # type: T.Dict[int, T.Dict[str, int]]
    violations = []
    for res in results:
        counts = per_n.setdefault(res.n, {"graphs": 0, "checks": 0})
        counts["graphs"] += res.graphs
        counts["checks"] += res.checks
        violations.extend(res.violations)
    violations.sort(
        key=lambda v: (v["n"], v["index"], v["k"], -1 if v["u"] is None else v["u"])
    )
    elapsed = time.perf_counter() - started
    graphs = sum(c["graphs"] for c in per_n.values())
    log.info(
        "exhaustive: %d graphs, %d violations in %.1fs",
        graphs,
        len(violations),
        elapsed,
    )
    doc = documents.summary_document(
        "exhaustive",
        max_k,
        {
            "max_n": max_n,
            "refined": refined,
            "brute_force": brute_force,
            "per_n": {str(n): per_n[n] for n in sorted(per_n)},
            "graphs": graphs,
            "checks": sum(c["checks"] for c in per_n.values()),
            "violations": violations,
            "seconds": round(elapsed, 3),
        },
    )
    return doc, EXIT_VIOLATION if violations else EXIT_OK


def run_bench(
    family: str, sizes: T.Sequence[int], k: int, seed: int, p: float = 0.5
) -> Run:
    """Time the solver on a graph family and report its counters."""
    runs = []
    code = EXIT_OK
    for n in sizes:
        G = make_family(family, n, seed, p)
        started = time.perf_counter()
        try:
            result = solve_with_stats(G, k)
        except SolverInvariantError as e:
            log.error("n=%d: %s", n, e)
            runs.append({"n": n, "error": str(e)})
            code = EXIT_VIOLATION
            continue
        elapsed = time.perf_counter() - started
        log.info("%s n=%d k=%d solved in %.3fs", family, n, k, elapsed)
        runs.append(
            {
                "n": n,
                "edges": G.edge_count(),
                "outcome": "pk_free" if result.is_pk_free else "avoidable_path",
                "path": None if result.path is None else list(result.path),
                "seconds": round(elapsed, 6),
                "stats": result.stats.as_dict(),
                "bounds": {
                    "merges": max(n - 1, 0),
                    "refined_calls": n,
                    "induced_path_calls": n * n + n,
                },
            }
        )
    body = {"family": family, "seed": seed, "runs": runs}
    if family == "gnp":
        body["p"] = p
    return documents.summary_document("bench", k, body), code
