"""Reading and writing vectors, matrices and reports.

Integers are written as decimal strings and rationals as ``"p/q"`` so JSON
output never loses precision; floats are written with 17 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .matrix import ExactMatrix


class InputError(ValueError):
    """Malformed input file; the message carries the line number when known."""


def format_number(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def parse_number(text: str) -> int | Fraction:
    text = text.strip()
    try:
        if "/" in text:
            q = Fraction(text)
            return q.numerator if q.denominator == 1 else q
        return int(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an integer or p/q rational: {text!r}") from None


def jsonable(obj, keep_ints: bool = False):
    """Recursively convert numbers to their exact string forms.

    With ``keep_ints`` plain integers stay JSON numbers (used for metadata
    such as N, never for payload entries).
    """
    if isinstance(obj, dict):
        return {str(k): jsonable(v, keep_ints) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, keep_ints) for v in obj]
    if isinstance(obj, ExactMatrix):
        return matrix_payload(obj)
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if keep_ints and isinstance(obj, int):
        return obj
    return format_number(obj)


def matrix_payload(M: ExactMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "entries": [format_number(x) for x in M.entries]}


def vector_payload(v) -> dict:
    return {"length": len(v), "entries": [format_number(x) for x in v]}


def document(kind: str, payload, **metadata) -> dict:
    return {"kind": kind, "payload": payload, "metadata": jsonable(metadata, keep_ints=True)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# readers


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _entries_from_json(data, path: str) -> list:
    try:
        return [parse_number(str(x)) for x in data]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def read_vector(path: str) -> list:
    """One entry per line (blank lines and ``#`` comments skipped), or a JSON
    vector document / ``{"entries": [...]}`` / bare list."""
    text = _read_text(path)
    if text.lstrip().startswith(("{", "[")):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
        if isinstance(data, dict):
            data = data.get("payload", data)
            data = data.get("entries") if isinstance(data, dict) else None
        if not isinstance(data, list):
            raise InputError(f"{path}: JSON vector needs an 'entries' list")
        return _entries_from_json(data, path)
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(parse_number(line))
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from None
    return values


def read_matrix(path: str) -> ExactMatrix:
    """CSV without header, or JSON ``{rows, cols, entries}`` (flat row-major or nested),
    optionally wrapped in an output document."""
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
        if "payload" in data:
            data = data["payload"]
        try:
            rows, cols, entries = data["rows"], data["cols"], data["entries"]
        except (KeyError, TypeError):
            raise InputError(f"{path}: JSON matrix needs 'rows', 'cols' and 'entries'") from None
        if entries and isinstance(entries[0], list):
            entries = [x for r in entries for x in r]
        try:
            return ExactMatrix(int(rows), int(cols), _entries_from_json(entries, path))
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from None
    rows = []
    for lineno, record in enumerate(csv.reader(io.StringIO(text)), 1):
        cells = [c for c in record]
        if not any(c.strip() for c in cells):
            continue
        try:
            rows.append([parse_number(c) for c in cells])
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from None
        if len(rows[-1]) != len(rows[0]):
            raise InputError(f"{path}:{lineno}: expected {len(rows[0])} columns, got {len(rows[-1])}")
    if not rows:
        raise InputError(f"{path}: empty matrix")
    return ExactMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# text renderings


def matrix_csv(M: ExactMatrix) -> str:
    return "".join(",".join(format_number(x) for x in row) + "\n" for row in M)


def vector_lines(v) -> str:
    return "".join(format_number(x) + "\n" for x in v)


def matrix_pretty(M: ExactMatrix) -> str:
    return M.pretty() + "\n"


def vector_pretty(v) -> str:
    return "[ " + "  ".join(format_number(x) for x in v) + " ]\n"
