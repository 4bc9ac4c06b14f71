"""Deterministic text forms for report and matrix output.

Identical inputs must produce byte-identical output across runs and machines,
so floats are printed with repr-faithful 17 significant digits, rationals as
p/q, complex values as a+bi, and dict keys are emitted sorted.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import numpy as np

from .exact import ComplexRational


def format_float(x: float) -> str:
    if x != x:
        return "nan"
    if x == float("inf"):
        return "inf"
    if x == float("-inf"):
        return "-inf"
    return f"{float(x):.17g}"


def format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{format_float(z.real)}{sign}{format_float(abs(z.imag))}i"


def format_entry(v) -> str:
    """Single-token form of a scalar for CSV cells."""
    if isinstance(v, ComplexRational):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (np.complexfloating, complex)):
        z = complex(v)
        if z.imag == 0.0:
            return format_float(z.real)
        return format_complex(z)
    if isinstance(v, (np.floating, float)):
        return format_float(float(v))
    if isinstance(v, (np.integer, int)):
        return str(int(v))
    raise TypeError(f"cannot format {type(v).__name__} as a matrix entry")


def jsonable(v) -> Any:
    """Convert nested values to JSON-compatible structures, deterministically.

    Exact numbers become their string forms (p/q, a+bi) so nothing silently
    loses precision; floats stay floats (json prints them repr-faithfully).
    """
    if v is None or isinstance(v, (bool, str, int)):
        return v
    if isinstance(v, (Fraction, ComplexRational)):
        return str(v)
    if isinstance(v, (np.floating, float)):
        f = float(v)
        if f != f or f in (float("inf"), float("-inf")):
            return format_float(f)
        return f
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, (np.complexfloating, complex)):
        return format_complex(complex(v))
    if isinstance(v, dict):
        return {str(k): jsonable(v[k]) for k in sorted(v, key=str)}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [jsonable(x) for x in v]
    if hasattr(v, "__dataclass_fields__"):
        return {
            name: jsonable(getattr(v, name))
            for name in sorted(v.__dataclass_fields__)
        }
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps_json(payload) -> str:
    """Canonical JSON text: sorted keys, no trailing whitespace drift."""
    return json.dumps(jsonable(payload), indent=2, sort_keys=True) + "\n"
