# -*- encoding: utf-8 -*-
"""Console script for avoidpath."""
import sys
from pprint import pformat
import typing as T

import click

from avoidpath.config import read_config, merge_configs, LOG_LEVELS
from avoidpath.corollaries import counterexample_graph
from avoidpath.documents import dumps
from avoidpath.formats import FormatError, format_edge_list, read_graphs, to_graph6
from avoidpath.generators import MAX_LABELED_N, SEED_LIMIT
from avoidpath.graph import Graph
from avoidpath import main as runners

MAX_VERIFY_K = 6


def _validate_k(ctx: click.Context, param: click.Parameter, value: T.Any) -> T.Any:
    if value is not None and value < 1:
        raise click.BadParameter(f"k must be a positive integer, got {value}")
    return value


def _validate_counterexample_k(
    ctx: click.Context, param: click.Parameter, value: T.Any
) -> T.Any:
    if value < 3:
        raise click.BadParameter(
            f"the counterexample family starts at k = 3, got {value}"
        )
    return value


def _validate_max_n(
    ctx: click.Context, param: click.Parameter, value: T.Any
) -> T.Any:
    if not 0 <= value <= MAX_LABELED_N:
        raise click.BadParameter(
            f"labelled enumeration is limited to n <= {MAX_LABELED_N}, got {value}"
        )
    return value


def _validate_path(
    ctx: click.Context, param: click.Parameter, value: T.Text
) -> T.List[int]:
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise click.BadParameter(
            f"expected comma separated vertex ids, got {value!r}"
        )


def _validate_p(ctx: click.Context, param: click.Parameter, value: T.Any) -> T.Any:
    if value is not None and not 0 <= value <= 1:
        raise click.BadParameter(f"p must lie in [0, 1], got {value}")
    return value


def _validate_seed(
    ctx: click.Context, param: click.Parameter, value: T.Any
) -> T.Any:
    if not 0 <= value < SEED_LIMIT:
        raise click.BadParameter(
            f"seed must be a 64-bit unsigned integer, got {value}"
        )
    return value


def _load(path: T.Text) -> T.List[Graph]:
    try:
        return read_graphs(path)
    except FormatError as e:
        raise click.BadParameter(str(e), param_hint="'--input'")


def _emit(ctx: click.Context, runs: T.Sequence[runners.Run]) -> None:
    """Print the documents and leave with the most severe status."""
    docs = [doc for doc, _ in runs]
    click.echo(dumps(docs[0] if len(docs) == 1 else docs))
    codes = {code for _, code in runs}
    for code in (runners.EXIT_VIOLATION, runners.EXIT_USAGE, runners.EXIT_ABSENT):
        if code in codes:
            ctx.exit(code)
    ctx.exit(runners.EXIT_OK)


input_option = click.option(
    "-i",
    "--input",
    "input_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Edge-list file, or graph6 file (.g6 or >>graph6<< header).",
)

k_option = click.option(
    "-k",
    "--k",
    "k",
    required=True,
    type=click.INT,
    callback=_validate_k,
    help="Number of vertices of the path.",
)


@click.group()
@click.option("-c", "--config", "config_path", help="The path to the config file.")
@click.option(
    "-l",
    "--log-level",
    "log_level",
    help="The log level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
)
@click.option("--syslog", help="Send the log also to the syslog", is_flag=True)
@click.option(
    "--log-file",
    "log_file",
    help="Send the log also to file",
    type=click.Path(dir_okay=False),
)
@click.pass_context
def main(
    ctx: click.Context,
    config_path: T.Optional[T.Text],
    log_level: T.Optional[T.Text],
    syslog: bool,
    log_file: T.Optional[T.Text],
) -> None:
    """Find and certify avoidable induced paths."""
    try:
        config = read_config(config_path)
    except (OSError, ValueError) as e:
        raise click.BadParameter(str(e), param_hint="'--config'")
    log_conf = {}  # type: T.Dict[T.Text, T.Any]
    if log_level:
        log_conf["level"] = log_level.upper()
    if syslog:
        log_conf["syslog"] = True
    if log_file:
        log_conf["log_file"] = log_file
    def_config = merge_configs(config, {"log": log_conf})
    runners.setup(def_config)
    if log_level and log_level.upper() == "DEBUG":
        click.echo("Resulting conf:\n{}".format(pformat(def_config)), err=True)
    ctx.obj = def_config


@main.command()
@input_option
@k_option
@click.option(
    "--refined",
    "refined",
    type=click.INT,
    help="Search an avoidable path away from N[U] (refined procedure).",
)
@click.pass_context
def find(
    ctx: click.Context, input_path: T.Text, k: int, refined: T.Optional[int]
) -> None:
    """Find an avoidable induced path on K vertices."""
    runs = []
    for G in _load(input_path):
        if refined is not None and not G.is_active(refined):
            raise click.BadParameter(
                f"{refined} is not a vertex of the graph", param_hint="'--refined'"
            )
        runs.append(runners.run_find(G, k, refined))
    _emit(ctx, runs)


@main.command()
@input_option
@k_option
@click.option(
    "--path",
    "path",
    required=True,
    callback=_validate_path,
    help='Comma separated vertex ids, e.g. "0,1,2".',
)
@click.pass_context
def verify(
    ctx: click.Context, input_path: T.Text, k: int, path: T.List[int]
) -> None:
    """Decide whether PATH is avoidable, with witnesses."""
    runs = []
    for G in _load(input_path):
        stray = [v for v in path if not 0 <= v < G.n]
        if stray:
            raise click.BadParameter(
                f"vertex ids {stray} out of range [0, {G.n})", param_hint="'--path'"
            )
        runs.append(runners.run_verify(G, k, path))
    _emit(ctx, runs)


@main.command("two-nonadjacent")
@input_option
@k_option
@click.pass_context
def two_nonadjacent(ctx: click.Context, input_path: T.Text, k: int) -> None:
    """Find two non-adjacent avoidable induced paths on K vertices."""
    _emit(ctx, [runners.run_two_nonadjacent(G, k) for G in _load(input_path)])


@main.command()
@click.option(
    "--max-n",
    "max_n",
    required=True,
    type=click.INT,
    callback=_validate_max_n,
    help=f"Largest vertex count (at most {MAX_LABELED_N}).",
)
@click.option(
    "--max-k",
    "max_k",
    required=True,
    type=click.INT,
    callback=_validate_k,
    help="Largest path length.",
)
@click.option(
    "--workers", "workers", type=click.IntRange(min=1), help="Worker processes."
)
@click.option(
    "--refined", "refined", is_flag=True, help="Also check every N[u] variant."
)
@click.option(
    "--brute-force",
    "brute_force",
    is_flag=True,
    help="Certify verdicts from the list of all induced cycles.",
)
@click.pass_context
def exhaustive(
    ctx: click.Context,
    max_n: int,
    max_k: int,
    workers: T.Optional[int],
    refined: bool,
    brute_force: bool,
) -> None:
    """Check the solver on every labelled graph with at most MAX_N vertices."""
    config = ctx.obj
    run = runners.run_exhaustive(
        max_n,
        max_k,
        workers=workers or config["workers"],
        chunk_size=config["chunk_size"],
        refined=refined,
        brute_force=brute_force,
        log_conf=config["log"],
    )
    _emit(ctx, [run])


@main.command()
@click.option(
    "-k",
    "--k",
    "k",
    required=True,
    type=click.INT,
    callback=_validate_counterexample_k,
    help="Path length, at least 3.",
)
@click.option(
    "--verify", "verify", is_flag=True, help="Check the disjointness claims."
)
@click.option(
    "-o",
    "--output",
    "output",
    type=click.Path(dir_okay=False),
    help="Also write the graph to this file.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["edgelist", "graph6"]),
    default="edgelist",
    show_default=True,
    help="Format of --output.",
)
@click.pass_context
def counterexample(
    ctx: click.Context, k: int, verify: bool, output: T.Optional[T.Text], fmt: T.Text
) -> None:
    """Odd cycle plus an apex: two disjoint P_K, no two disjoint avoidable ones."""
    if verify and k > MAX_VERIFY_K:
        raise click.BadParameter(
            f"--verify is limited to k <= {MAX_VERIFY_K}, got {k}", param_hint="'--k'"
        )
    run = runners.run_counterexample(k, verify)
    if output:
        G = counterexample_graph(k)
        text = format_edge_list(G) if fmt == "edgelist" else to_graph6(G) + "\n"
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    _emit(ctx, [run])


@main.command()
@click.option(
    "--family",
    "family",
    required=True,
    type=click.Choice(["gnp", "cycle", "chordal"]),
)
@click.option(
    "--n",
    "sizes",
    required=True,
    multiple=True,
    type=click.IntRange(min=3),
    help="Vertex count; repeat for a growth series.",
)
@k_option
@click.option(
    "--seed",
    "seed",
    required=True,
    type=click.INT,
    callback=_validate_seed,
    help="Seed of the random families.",
)
@click.option(
    "--p", "p", type=click.FLOAT, callback=_validate_p, help="Edge probability."
)
@click.pass_context
def bench(
    ctx: click.Context,
    family: T.Text,
    sizes: T.Tuple[int, ...],
    k: int,
    seed: int,
    p: T.Optional[float],
) -> None:
    """Time the solver and report its search counters."""
    p = ctx.obj["gnp_p"] if p is None else p
    _emit(ctx, [runners.run_bench(family, sizes, k, seed, p)])


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
