"""Deterministic JSON reports.

Floats are written with 17 significant digits so every double round-trips,
keys keep insertion order and indentation is fixed, which makes two runs with
the same inputs byte-identical.
"""

from __future__ import annotations

import json
import math

import numpy as np

from . import __version__

REPORT_KEYS = ("config", "suite_or_run", "results", "residuals", "failures", "version")


def _float(v: float) -> str:
    if math.isnan(v):
        return '"nan"'
    if math.isinf(v):
        return '"inf"' if v > 0 else '"-inf"'
    text = "%.17g" % v
    if text in ("0", "-0"):
        return "0.0"
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    return _encode(obj, indent, 0) + "\n"


def build_report(config, suite_or_run, results, residuals, failures) -> dict:
    return {
        "config": config,
        "suite_or_run": suite_or_run,
        "results": results,
        "residuals": residuals,
        "failures": failures,
        "version": __version__,
    }


def suite_report(config, name, suite_results) -> dict:
    return build_report(
        config,
        name,
        {r.name: r.summary() for r in suite_results},
        {r.name: r.residuals() for r in suite_results},
        [f for r in suite_results for f in r.failures],
    )
