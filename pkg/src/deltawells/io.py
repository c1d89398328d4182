"""Text output: CSV with 17 significant digits, JSON, atomic file writes."""
from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def csv_text(header: list[str], columns) -> str:
    rows = np.column_stack([np.asarray(c, dtype=float) for c in columns])
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def matrix_csv(matrix) -> str:
    """Row-major dump of a matrix, no header."""
    m = np.asarray(matrix, dtype=float)
    return "\n".join(",".join(fmt(v) for v in row) for row in m) + "\n"


def flow_csv(flow) -> str:
    n = flow.branch_values.shape[1]
    header = ["kappa"] + [f"omega_{k}" for k in range(1, n + 1)]
    return csv_text(header, [flow.kappa_grid, *flow.branch_values.T])


def _clean(obj):
    # JSON has no inf/nan; numpy scalars and arrays become plain Python
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else None
    return obj


def json_text(obj) -> str:
    """Deterministic JSON; floats use Python's shortest round-trip repr."""
    return json.dumps(_clean(obj), indent=2, sort_keys=False) + "\n"


def atomic_write(path: str | Path, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
