"""Trace operations and the line-oriented trace file codec.

Format, one operation per line::

    I <id> <s> <f> [<w>]
    D <id>
    Q
    # comment

Blank lines are ignored. A leading ``# dynisched trace key=value ...`` comment
carries generator metadata.
"""

from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

HEADER_PREFIX = "# dynisched trace"


class ParseError(Exception):
    """A trace line could not be parsed or executed."""

    def __init__(self, line_no: int, message: str) -> None:
        self.line_no = line_no
        self.message = message
        super().__init__(f"line {line_no}: {message}")

    def __reduce__(self) -> tuple[type["ParseError"], tuple[int, str]]:
        return ParseError, (self.line_no, self.message)


class InsertOp(BaseModel):
    """Insert a fresh interval ``[s, f)``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["I"] = "I"
    id: int = Field(..., description="Handle, never reused within a trace")
    s: int = Field(..., description="Start coordinate")
    f: int = Field(..., description="End coordinate, strictly greater than s")
    weight: int = Field(default=1, ge=0, description="Weight used by weighted engines")

    @model_validator(mode="after")
    def check_order(self) -> "InsertOp":
        if self.s >= self.f:
            raise ValueError(f"start {self.s} must be smaller than end {self.f}")
        return self


class DeleteOp(BaseModel):
    """Delete a live interval by id."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["D"] = "D"
    id: int


class QueryOp(BaseModel):
    """Ask for the current optimum."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["Q"] = "Q"


TraceOp = Annotated[InsertOp | DeleteOp | QueryOp, Field(discriminator="kind")]

_op_adapter: TypeAdapter[InsertOp | DeleteOp | QueryOp] = TypeAdapter(TraceOp)

_FIELDS = {"I": ("id", "s", "f", "weight"), "D": ("id",), "Q": ()}
_REQUIRED = {"I": 3, "D": 1, "Q": 0}


def parse_line(line: str, line_no: int) -> InsertOp | DeleteOp | QueryOp | None:
    """Parse one trace line; comments and blank lines yield None.

    Raises:
        ParseError: The line is not a well-formed operation.
    """
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    kind, *args = text.split()
    fields = _FIELDS.get(kind)
    if fields is None:
        raise ParseError(line_no, f"unknown operation {kind!r}")
    if not _REQUIRED[kind] <= len(args) <= len(fields):
        raise ParseError(line_no, f"operation {kind} takes {_REQUIRED[kind]} to {len(fields)} arguments")
    try:
        values = [int(a) for a in args]
    except ValueError:
        raise ParseError(line_no, f"non-integer argument in {text!r}")
    try:
        return _op_adapter.validate_python({"kind": kind, **dict(zip(fields, values, strict=False))})
    except ValidationError as exc:
        raise ParseError(line_no, exc.errors()[0]["msg"])


def iter_trace(lines: Iterable[str]) -> Iterator[tuple[int, InsertOp | DeleteOp | QueryOp]]:
    """Yield ``(line_no, op)`` pairs for every operation line."""
    for line_no, line in enumerate(lines, start=1):
        op = parse_line(line, line_no)
        if op is not None:
            yield line_no, op


def read_trace(path: Path | str) -> list[tuple[int, InsertOp | DeleteOp | QueryOp]]:
    with open(path, encoding="utf-8") as f:
        return list(iter_trace(f))


def read_header(path: Path | str) -> dict[str, str]:
    """Metadata from the generator header line, empty if there is none."""
    with open(path, encoding="utf-8") as f:
        first = f.readline().strip()
    if not first.startswith(HEADER_PREFIX):
        return {}
    pairs = (token.split("=", 1) for token in first[len(HEADER_PREFIX) :].split() if "=" in token)
    return {key: value for key, value in pairs}


def format_op(op: InsertOp | DeleteOp | QueryOp) -> str:
    match op:
        case InsertOp(weight=1):
            return f"I {op.id} {op.s} {op.f}"
        case InsertOp():
            return f"I {op.id} {op.s} {op.f} {op.weight}"
        case DeleteOp():
            return f"D {op.id}"
        case QueryOp():
            return "Q"
    raise TypeError(f"not a trace operation: {op!r}")


def write_trace(
    path: Path | str,
    ops: Iterable[InsertOp | DeleteOp | QueryOp],
    header: dict[str, str] | None = None,
) -> int:
    """Write operations to ``path``; returns the number written."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        if header:
            meta = " ".join(f"{key}={value}" for key, value in header.items())
            f.write(f"{HEADER_PREFIX} {meta}\n")
        for op in ops:
            f.write(format_op(op) + "\n")
            count += 1
    return count
