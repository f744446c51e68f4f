"""Config command: view the effective settings or validate a config file."""

from pathlib import Path

import typer
import yaml
from pydantic import ValidationError

from dynisched.cli.ui.console import (
    console,
    print_error,
    print_header,
    print_key_value_table,
    print_muted,
    print_success,
    print_warning,
)
from dynisched.config import ConfigError, ConfigLoader, Settings


def _check(loader: ConfigLoader) -> bool:
    path = loader.find_config_file()
    if loader.config_path is not None and path != loader.config_path:
        print_error(f"Config file not found: {loader.config_path}")
        return False
    if path is None:
        print_warning("No config file found; built-in defaults and environment apply.")
    try:
        loader.load_settings()
    except (ConfigError, yaml.YAMLError) as exc:
        print_error(f"Unreadable config: {exc}")
        return False
    except ValidationError as exc:
        for error in exc.errors():
            where = ".".join(str(part) for part in error["loc"])
            print_error(f"{where}: {error['msg']}")
        return False
    for section in loader.unknown_sections():
        print_warning(f"Unknown section '{section}' is ignored")
    print_success(f"Configuration is valid{f' ({path})' if path else ''}")
    return True


def _show(settings: Settings) -> None:
    print_header("dynisched Configuration")
    print_key_value_table(
        "Engine",
        {
            "Name": settings.engine.name,
            "Machines": str(settings.engine.machines),
            "Debug Assert": str(settings.engine.debug_assert),
            "Eager Tables": str(settings.engine.eager_tables),
        },
    )
    console.print()
    print_key_value_table(
        "Workload",
        {
            "Model": str(settings.workload.model),
            "Ops": str(settings.workload.ops),
            "Mix": settings.workload.mix,
            "Coordinate Range": str(settings.workload.coord_range),
            "Max Length": str(settings.workload.max_length),
            "Seed": str(settings.workload.seed),
        },
    )
    console.print()
    print_key_value_table(
        "Bench",
        {
            "Engines": ", ".join(settings.bench.engines),
            "Output Path": settings.bench.output_path,
            "Jobs": str(settings.bench.jobs),
        },
    )
    console.print()
    print_key_value_table(
        "Reduction",
        {
            "l": str(settings.reduction.ell),
            "Nodes": str(settings.reduction.nodes),
            "Max Weight": str(settings.reduction.max_weight),
            "Density": str(settings.reduction.density),
            "Seed": str(settings.reduction.seed),
        },
    )
    console.print()
    print_key_value_table("Logging", {"Level": settings.logging.level})
    print_muted("\nTip: use 'dynisched config --check' to validate a config file.")


def config(
    show: bool = typer.Option(
        False,
        "--show",
        help="Show the effective settings (the default).",
    ),
    check: bool = typer.Option(
        False,
        "--check",
        help="Validate the config file and exit nonzero on errors.",
    ),
    config_file: str | None = typer.Option(
        None,
        "--config",
        "-c",
        help="Path to configuration YAML file.",
    ),
) -> None:
    """View the effective configuration and validate config files.

    Settings come from the YAML config file (config.yaml, config.yml,
    dynisched.yaml or dynisched.yml in the current directory, or --config)
    and from DYNISCHED_* environment variables.
    """
    loader = ConfigLoader(Path(config_file) if config_file else None)
    if check:
        if not _check(loader):
            raise typer.Exit(code=1)
        if not show:
            return

    try:
        settings = loader.load_settings()
    except (ConfigError, yaml.YAMLError, ValidationError) as exc:
        print_error(f"Invalid configuration: {exc}")
        raise typer.Exit(code=1)
    _show(settings)
