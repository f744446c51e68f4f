"""CLI commands for dynisched."""

from .bench import bench
from .config_cmd import config
from .gen import gen
from .reduce import reduce
from .run import run
from .verify import verify

__all__ = [
    "bench",
    "config",
    "gen",
    "reduce",
    "run",
    "verify",
]
