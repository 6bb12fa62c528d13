"""Canonical serialization helpers shared by file formats and the service.

Floats that cross a process boundary (reward service responses, score files)
are rendered with exactly 17 significant digits so that any client can compare
values bit-exactly as strings. JSONL files are written compactly with UTF-8
and no key reordering, which keeps repeated runs byte-identical.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Iterable, Iterator

from .errors import ParseError


def canonical17(x: float) -> str:
    """Render a finite float with 17 significant digits, e.g. '1.2500000000000000e-1'."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"expected a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    mantissa, _, exponent = f"{x:.16e}".partition("e")
    return f"{mantissa}e{int(exponent)}"


def canonical17_list(values: Iterable[float]) -> list[str]:
    return [canonical17(v) for v in values]


def dumps_line(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def write_jsonl(path: str | Path, rows: Iterable[Any]) -> int:
    """Write one JSON object per line; returns the number of lines."""
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(dumps_line(row))
            fh.write("\n")
            n += 1
    return n


def iter_jsonl(path: str | Path) -> Iterator[tuple[int, Any]]:
    """Yield (line_number, parsed object) pairs; blank lines are skipped."""
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON ({exc.msg})", lineno) from exc


def read_jsonl(path: str | Path) -> list[Any]:
    return [obj for _, obj in iter_jsonl(path)]
