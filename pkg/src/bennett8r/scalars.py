"""Scalar helpers for the two coefficient realizations (exact Fraction, float).

All algebraic code in this package is generic over the scalar type: it only
uses ``+``, ``-``, ``*``, ``/`` and comparisons, so ``fractions.Fraction``
(exact mode) and ``float`` coexist without duplication.  The helpers here
centralize zero tests, JSON round-tripping ("p/q" strings in exact mode) and
the module-level float tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Default tolerance for float-mode predicates on unit-scaled quantities.
EPS_TOL = 1e-9


def is_exact(x) -> bool:
    return not isinstance(x, float)


def near_zero(x, tol: float | None = None) -> bool:
    """Zero test: |x| <= tol for floats, exact equality otherwise."""
    if isinstance(x, float):
        if tol is None:
            tol = EPS_TOL
        return abs(x) <= tol
    return bool(x == 0)


def scalar_to_json(x):
    """Encode a scalar for JSON: Fractions become "p/q" strings."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return x
    return float(x)


def scalar_from_json(v, exact: bool = True):
    """Decode a JSON number or "p/q" string into the requested realization."""
    if isinstance(v, str):
        x = Fraction(v)
    elif isinstance(v, bool):
        raise ValueError(f"not a scalar: {v!r}")
    elif isinstance(v, int):
        x = Fraction(v)
    elif isinstance(v, float):
        x = Fraction(v) if exact else v
    else:
        raise ValueError(f"not a scalar: {v!r}")
    return x if exact else float(x)


def as_float(x) -> float:
    return float(x)


def isqrt_like(x) -> float:
    """Square root as a float, regardless of scalar realization."""
    return math.sqrt(float(x))
