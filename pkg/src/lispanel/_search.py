"""Scalar search primitives shared by the fitting and power-optimization code."""

from __future__ import annotations

import math

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi


def golden_section_min(f, a: float, b: float, rel_tol: float = 1e-8,
                       max_iter: int = 200) -> float:
    """Minimize a unimodal scalar function on [a, b].

    Returns the midpoint of the final bracket once its width falls below
    rel_tol relative to the bracket location.
    """
    if not a < b:
        raise ValueError(f"invalid bracket [{a}, {b}]")
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if (b - a) <= rel_tol * max(abs(a), abs(b), 1e-300):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def bisect_root(f, a: float, b: float, rel_tol: float = 1e-10,
                max_iter: int = 200) -> float:
    """Root of f on a sign-changing bracket [a, b] by plain bisection."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0:
        raise ValueError(f"no sign change on [{a}, {b}]")
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if (b - a) <= rel_tol * max(abs(mid), 1e-300):
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if fa * fm < 0:
            b = mid
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)
