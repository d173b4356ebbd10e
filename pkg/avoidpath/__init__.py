"""Top-level package for avoidpath."""

__author__ = """Leonardo Barcaroli"""
__email__ = "leonardo.barcaroli@prima.it"
__version__ = "0.1.0"

from avoidpath.avoidability import check_avoidable, enumerate_extensions  # noqa: F401
from avoidpath.corollaries import (  # noqa: F401
    counterexample_graph,
    find_avoidable_outside,
    find_two_nonadjacent_avoidable,
    verify_counterexample,
)
from avoidpath.graph import Graph, GraphError, build_graph  # noqa: F401
from avoidpath.paths import find_induced_path  # noqa: F401
from avoidpath.solver import (  # noqa: F401
    find_avoidable_path,
    find_avoidable_path_refined,
)
