# -*- encoding: utf-8 -*-
"""
Graph file formats.

Edge list (canonical)::

    # comment lines start with '#'
    n m
    u v
    ...

with 0-indexed ids, one edge per line, ``m`` edge lines. The canonical
rendering lists edges ascending with ``u < v``.

graph6 strings (one graph per line, optional ``>>graph6<<`` header) are
decoded and encoded through networkx.
"""

import hashlib
import logging
import pathlib
import typing as T

import networkx as nx

from avoidpath.graph import Graph, GraphError, build_graph

log = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SUFFIXES = (".g6", ".graph6")


class FormatError(ValueError):
    """A graph file could not be parsed."""


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document; duplicate edges are collapsed with a warning."""
    header = None
    edges = []  # type: T.List[T.Tuple[int, int]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers, got {line!r}")
        if header is None:
            if a < 0 or b < 0:
                raise FormatError(f"line {lineno}: negative counts in header {line!r}")
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"line {lineno}: vertex id out of range [0, {n})")
        if a == b:
            raise FormatError(f"line {lineno}: self-loop on vertex {a}")
        edges.append((a, b))
    if header is None:
        raise FormatError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    distinct = {(min(u, v), max(u, v)) for u, v in edges}
    if len(distinct) != len(edges):
        log.warning("collapsed %d duplicate edge(s)", len(edges) - len(distinct))
    try:
        return build_graph(n, edges)
    except GraphError as e:
        raise FormatError(str(e))


def format_edge_list(G: Graph) -> str:
    """The canonical edge-list rendering of the active part of ``G``."""
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_networkx(H: nx.Graph) -> Graph:
    """Relabel ``H``'s nodes to 0..n-1 in their iteration order."""
    index = {node: i for i, node in enumerate(H.nodes())}
    return build_graph(len(index), [(index[a], index[b]) for a, b in H.edges()])


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices())
    H.add_edges_from(G.edges())
    return H


def parse_graph6(text: str) -> T.List[Graph]:
    """Decode a stream of graph6 lines (header and blank lines tolerated)."""
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        try:
            H = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, UnicodeEncodeError, ValueError) as e:
            raise FormatError(f"line {lineno}: invalid graph6 string: {e}")
        graphs.append(from_networkx(H))
    return graphs


def to_graph6(G: Graph) -> str:
    """graph6 encoding of the full id space of ``G`` (no header, no newline)."""
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return nx.to_graph6_bytes(H, header=False).decode("ascii").strip()


def is_graph6(path: T.Union[str, pathlib.Path], text: str) -> bool:
    return pathlib.Path(path).suffix in GRAPH6_SUFFIXES or text.lstrip().startswith(
        GRAPH6_HEADER
    )


def read_graphs(path: T.Union[str, pathlib.Path]) -> T.List[Graph]:
    """Read every graph stored in ``path`` (edge list, or graph6 stream)."""
    try:
        text = pathlib.Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(
            f"{path}: not a UTF-8 text file ({e.reason} at byte {e.start})"
        )
    except OSError as e:
        raise FormatError(f"{path}: cannot be read: {e.strerror or e}")
    if is_graph6(path, text):
        graphs = parse_graph6(text)
        if not graphs:
            raise FormatError(f"{path}: no graph6 entry found")
        return graphs
    return [parse_edge_list(text)]


def read_graph(path: T.Union[str, pathlib.Path]) -> Graph:
    """Read the single graph stored in ``path``."""
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise FormatError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def digest(G: Graph) -> str:
    """SHA-256 of the canonical edge list, identifying the input of a run."""
    return hashlib.sha256(format_edge_list(G).encode("utf-8")).hexdigest()
