"""JSON helpers: 15-significant-digit floats, numpy-friendly conversion."""

from __future__ import annotations

import json

import numpy as np


def sig15(x: float) -> float:
    """Round to 15 significant digits (stable textual JSON output)."""
    return float(f"{x:.15g}")


def jsonify(obj):
    """Recursively convert to JSON-ready types; floats rounded to 15 digits."""
    if isinstance(obj, dict):
        return {k: jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonify(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return sig15(float(obj))
    return obj


def dumps(obj, indent: int | None = None) -> str:
    return json.dumps(jsonify(obj), indent=indent, sort_keys=False)
