"""JSON documents for cells and check reports.

Layout::

    {"kind": "one-cell", "from": n, "to": m, "dims": [[...]]}
    {"kind": "two-cell", "source": {"from", "to", "dims"}, "target": {...},
     "entries": [[ [[re, im], ...], ... ]]}
    {"kind": "report", "name": ..., "passed": ..., "max_entry_error": ...,
     "fitted_scalar": [re, im] | null}

Each two-cell entry is flattened row-major into ``[re, im]`` pairs; its shape
is recovered from the boundary dims. Floats are written with 17 significant
digits so that values survive a round trip exactly. An infinite error is
written as ``null``.
"""

from __future__ import annotations

import json
import math
from typing import Any, Union

import numpy as np

from .core import OneCell, TwoCell
from .protocols import CheckReport

Document = Union[OneCell, TwoCell, CheckReport]


class SerializationError(ValueError):
    """Malformed document; ``path`` locates the problem (``$.entries[0][1]``)."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


# --- writing ---------------------------------------------------------------

def _emit(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return "null"
        return format(float(value), ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_emit(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_emit(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _one_cell_fields(f: OneCell) -> dict:
    return {"from": f.source, "to": f.target, "dims": [list(r) for r in f.dims]}


def to_document(obj: Document) -> dict:
    if isinstance(obj, OneCell):
        return {"kind": "one-cell", **_one_cell_fields(obj)}
    if isinstance(obj, TwoCell):
        entries = [[[[float(z.real), float(z.imag)] for z in e.reshape(-1)] for e in row]
                   for row in obj.entries]
        return {"kind": "two-cell", "source": _one_cell_fields(obj.source),
                "target": _one_cell_fields(obj.target), "entries": entries}
    if isinstance(obj, CheckReport):
        s = obj.fitted_scalar
        return {"kind": "report", "name": obj.name, "passed": bool(obj.passed),
                "max_entry_error": float(obj.max_entry_error),
                "fitted_scalar": None if s is None else [float(s.real), float(s.imag)]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize(obj: Document) -> str:
    return _emit(to_document(obj))


# --- reading ---------------------------------------------------------------

def _require(doc: dict, key: str, path: str):
    if not isinstance(doc, dict):
        raise SerializationError(path, "expected an object")
    if key not in doc:
        raise SerializationError(path, f"missing field {key!r}")
    return doc[key]


def _int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SerializationError(path, "expected an integer")
    return v


def _number(v, path: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SerializationError(path, "expected a number")
    return float(v)


def _list(v, path: str) -> list:
    if not isinstance(v, list):
        raise SerializationError(path, "expected an array")
    return v


def _read_one_cell(doc, path: str) -> OneCell:
    src = _int(_require(doc, "from", path), f"{path}.from")
    tgt = _int(_require(doc, "to", path), f"{path}.to")
    dims = _list(_require(doc, "dims", path), f"{path}.dims")
    rows = []
    for i, row in enumerate(dims):
        row = _list(row, f"{path}.dims[{i}]")
        rows.append([_int(x, f"{path}.dims[{i}][{j}]") for j, x in enumerate(row)])
    try:
        return OneCell(src, tgt, rows)
    except ValueError as exc:
        raise SerializationError(path, str(exc)) from None


def _read_two_cell(doc, path: str) -> TwoCell:
    f = _read_one_cell(_require(doc, "source", path), f"{path}.source")
    g = _read_one_cell(_require(doc, "target", path), f"{path}.target")
    if (f.source, f.target) != (g.source, g.target):
        raise SerializationError(path, "source and target connect different objects")
    entries = _list(_require(doc, "entries", path), f"{path}.entries")
    if len(entries) != f.target:
        raise SerializationError(f"{path}.entries", f"expected {f.target} rows")
    mats = []
    for i, row in enumerate(entries):
        row = _list(row, f"{path}.entries[{i}]")
        if len(row) != f.source:
            raise SerializationError(f"{path}.entries[{i}]", f"expected {f.source} entries")
        out_row = []
        for j, flat in enumerate(row):
            p = f"{path}.entries[{i}][{j}]"
            flat = _list(flat, p)
            shape = (g.dims[i][j], f.dims[i][j])
            if len(flat) != shape[0] * shape[1]:
                raise SerializationError(p, f"expected {shape[0] * shape[1]} values for a "
                                            f"{shape[0]}x{shape[1]} block")
            vals = []
            for k, pair in enumerate(flat):
                pair = _list(pair, f"{p}[{k}]")
                if len(pair) != 2:
                    raise SerializationError(f"{p}[{k}]", "expected a [re, im] pair")
                vals.append(complex(_number(pair[0], f"{p}[{k}][0]"),
                                    _number(pair[1], f"{p}[{k}][1]")))
            out_row.append(np.array(vals, dtype=complex).reshape(shape))
        mats.append(out_row)
    return TwoCell(f, g, mats)


def _read_report(doc, path: str) -> CheckReport:
    name = _require(doc, "name", path)
    if not isinstance(name, str):
        raise SerializationError(f"{path}.name", "expected a string")
    passed = _require(doc, "passed", path)
    if not isinstance(passed, bool):
        raise SerializationError(f"{path}.passed", "expected a boolean")
    err = _require(doc, "max_entry_error", path)
    err = float("inf") if err is None else _number(err, f"{path}.max_entry_error")
    s = doc.get("fitted_scalar")
    if s is not None:
        s = _list(s, f"{path}.fitted_scalar")
        if len(s) != 2:
            raise SerializationError(f"{path}.fitted_scalar", "expected a [re, im] pair")
        s = complex(_number(s[0], f"{path}.fitted_scalar[0]"),
                    _number(s[1], f"{path}.fitted_scalar[1]"))
    return CheckReport(name, passed, err, s)


def from_document(doc: Any, path: str = "$") -> Document:
    kind = _require(doc, "kind", path)
    if kind == "one-cell":
        return _read_one_cell(doc, path)
    if kind == "two-cell":
        return _read_two_cell(doc, path)
    if kind == "report":
        return _read_report(doc, path)
    raise SerializationError(f"{path}.kind", f"unknown kind {kind!r}")


def deserialize(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError("$", f"invalid JSON ({exc.msg} at line {exc.lineno} "
                                      f"column {exc.colno})") from None
    return from_document(doc)
