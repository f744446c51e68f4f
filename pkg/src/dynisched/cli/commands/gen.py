"""Gen command: write a random trace file."""

from pathlib import Path

import typer
from pydantic import ValidationError

from dynisched.bench.workload import BadMix, WorkloadModel, WorkloadParams, generate, parse_mix
from dynisched.cli.ui.console import print_error, print_success
from dynisched.config import load_settings
from dynisched.models.trace import format_op, write_trace


def gen(
    model: WorkloadModel | None = typer.Option(
        None,
        "--model",
        help="Workload model: uniform, nested, sliding or partchurn.",
    ),
    ops: int | None = typer.Option(
        None,
        "--ops",
        "-n",
        help="Number of operations.",
    ),
    mix: str | None = typer.Option(
        None,
        "--mix",
        help="Insert:delete:query shares summing to 1, e.g. 0.5:0.3:0.2.",
    ),
    seed: int | None = typer.Option(
        None,
        "--seed",
        "-s",
        help="Generator seed.",
    ),
    coord_range: int | None = typer.Option(
        None,
        "--coord-range",
        help="Start coordinates are drawn from [0, coord-range).",
    ),
    max_length: int | None = typer.Option(
        None,
        "--max-length",
        help="Longest generated interval.",
    ),
    out: Path | None = typer.Option(
        None,
        "--out",
        "-o",
        help="Trace file to write. Prints to stdout when omitted.",
    ),
    config_file: str | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to configuration YAML file.",
    ),
) -> None:
    """Generate a random trace.

    The same model, parameters and seed always produce a byte-identical
    trace. The first line is a header recording model, seed and op count.
    """
    settings = load_settings(config_file)
    defaults = settings.workload
    try:
        parse_mix(mix or defaults.mix)
        params = WorkloadParams(
            model=model or defaults.model,
            ops=ops if ops is not None else defaults.ops,
            mix=mix or defaults.mix,
            coord_range=coord_range or defaults.coord_range,
            max_length=max_length or defaults.max_length,
            seed=seed if seed is not None else defaults.seed,
        )
    except BadMix as exc:
        print_error(str(exc))
        raise typer.Exit(code=1)
    except ValidationError as exc:
        print_error(f"Invalid workload parameters: {exc.errors()[0]['msg']}")
        raise typer.Exit(code=1)

    trace = generate(params)
    if out is None:
        typer.echo(f"# dynisched trace {' '.join(f'{k}={v}' for k, v in params.header().items())}")
        for op in trace:
            typer.echo(format_op(op))
        return

    count = write_trace(out, trace, params.header())
    print_success(f"Wrote {count} operations to {out}")
