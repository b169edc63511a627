"""Shared numeric assertions for the test suite."""

from __future__ import annotations

import math


def ulp_scale(*values: float) -> float:
    scale = max(abs(v) for v in values)
    return math.ulp(scale) if scale > 0 else 5e-324


def close_ulps(a: float, b: float, n: int) -> bool:
    """|a - b| within n ulps at the scale of the larger magnitude."""
    return abs(a - b) <= n * ulp_scale(a, b)


def leq_ulps(a: float, b: float, n: int) -> bool:
    """a <= b with n ulps of slack."""
    return a <= b + n * ulp_scale(a, b)


def close_rel(a: float, b: float, rel: float) -> bool:
    """|a - b| within rel, relative to max(1, |b|)."""
    return abs(a - b) <= rel * max(1.0, abs(b))


def vectors_close_ulps(u, v, n: int, scale: float | None = None) -> bool:
    """Componentwise closeness, n ulps at the computation's magnitude scale.

    By default the scale is the largest entry of either vector; sums that
    cancel should pass the scale of their accumulated terms instead.
    """
    if scale is None:
        scale = max((abs(x) for x in (*u, *v)), default=0.0)
    if scale == 0.0:
        return all(a == b for a, b in zip(u, v))
    tol = n * math.ulp(scale)
    return all(abs(a - b) <= tol for a, b in zip(u, v))


def inf_norm(coeffs) -> float:
    return max(abs(c) for c in coeffs)
