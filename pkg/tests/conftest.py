"""Pytest configuration and fixtures for dynisched tests."""

from pathlib import Path

import pytest

from dynisched.models.intervals import Interval
from tests.helpers import FIX1, FIX2, FIX3, FIXF, stamp_named


@pytest.fixture
def fix1() -> dict[str, Interval]:
    """A=(0,2), C=(1,4), B=(3,5), D=(6,7)."""
    return stamp_named(FIX1)


@pytest.fixture
def fix2() -> dict[str, Interval]:
    """P=(0,10) containing Q=(2,3) and R=(4,6)."""
    return stamp_named(FIX2)


@pytest.fixture
def fix3() -> dict[str, Interval]:
    return stamp_named(FIX3)


@pytest.fixture
def fixf() -> dict[str, Interval]:
    """I1=(0,2), I2=(4,6), I3=(5,8), I4=(7,10)."""
    return stamp_named(FIXF)


@pytest.fixture
def trace_file(tmp_path: Path) -> Path:
    """FIX1 inserted followed by one query."""
    path = tmp_path / "fix1.trace"
    path.write_text("I 1 0 2\nI 2 3 5\nI 3 1 4\nI 4 6 7\nQ\n", encoding="utf-8")
    return path


@pytest.fixture
def cli_env(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run CLI commands from an empty directory on a console wide enough not to wrap paths."""
    from dynisched.cli.ui.console import console

    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr(console, "width", 240)
    return tmp_path
