"""Reduce command: check the cycle reduction on a random circle-layered graph."""

import typer

from dynisched.cli.ui.console import (
    print_error,
    print_header,
    print_key_value_table,
    print_verdict,
    print_warning,
)
from dynisched.cli.ui.progress import spinner
from dynisched.config import load_settings
from dynisched.reduction import TooLarge, brute_cycle, gen_graph, solve


def _show(weight: int | None) -> str:
    return "none" if weight is None else str(weight)


def reduce(
    ell: int | None = typer.Option(
        None,
        "--l",
        "--ell",
        "-l",
        help="Cycle length is 2l+1.",
    ),
    nodes: int | None = typer.Option(
        None,
        "--nodes",
        "-n",
        help="Nodes per layer.",
    ),
    seed: int | None = typer.Option(
        None,
        "--seed",
        "-s",
        help="Graph seed.",
    ),
    max_weight: int | None = typer.Option(
        None,
        "--max-weight",
        help="Edge weights are drawn from [1, max-weight].",
    ),
    density: float | None = typer.Option(
        None,
        "--density",
        help="Probability that each possible edge is present.",
    ),
    config_file: str | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to configuration YAML file.",
    ),
) -> None:
    """Solve a minimum-weight cycle through weighted interval scheduling.

    Builds a random circle-layered graph, finds its lightest cycle through
    all 2l+1 layers by guessing the start node and solving the weighted
    interval instance for each guess, and compares the result with
    exhaustive enumeration. Exits with code 1 when the two disagree.
    """
    settings = load_settings(config_file)
    defaults = settings.reduction
    try:
        graph = gen_graph(
            ell if ell is not None else defaults.ell,
            nodes if nodes is not None else defaults.nodes,
            max_weight if max_weight is not None else defaults.max_weight,
            seed if seed is not None else defaults.seed,
            density if density is not None else defaults.density,
        )
    except ValueError as exc:
        print_error(str(exc))
        raise typer.Exit(code=1)

    print_header(f"Reduction: l={graph.ell}, {graph.n} nodes per layer, {len(graph)} edges")
    with spinner(f"Solving {graph.n} guesses..."):
        result = solve(graph)
    try:
        brute = brute_cycle(graph)
    except TooLarge as exc:
        print_key_value_table("Interval scheduling", {"cycle weight": _show(result.weight)})
        print_warning(f"Exhaustive check skipped: {exc}")
        return

    print_key_value_table(
        "Solvers",
        {
            "interval scheduling": _show(result.weight),
            "witness node": _show(result.witness),
            "optimum value": _show(result.value),
            "exhaustive": _show(brute),
        },
    )
    passed = result.weight == brute
    print_verdict(passed, "PASS" if passed else "FAIL")
    if not passed:
        raise typer.Exit(code=1)
