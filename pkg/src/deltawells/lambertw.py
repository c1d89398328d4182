"""Real branches of the Lambert W function, the inverse of ``y exp(y)``.

``lambert_w0`` is the principal branch (``W >= -1``, defined for
``z >= -1/e``) and ``lambert_wm1`` the lower branch (``W <= -1``, defined for
``-1/e <= z < 0``).  Both refine a series or asymptotic starting guess with
Halley's iteration.
"""
from __future__ import annotations

import math

from .errors import DomainError

_INV_E = math.exp(-1.0)
_EPS = 2.220446049250313e-16


def _branch_point_p(z: float) -> float:
    """``sqrt(2 (e z + 1))``; zero at the branch point, clamped at rounding level."""
    t = 2.0 * (math.e * z + 1.0)
    return math.sqrt(t) if t > 0 else 0.0


def _check_branch_domain(z: float) -> None:
    if math.isnan(z) or z < -_INV_E * (1.0 + 4 * _EPS):
        raise DomainError(f"Lambert W is real only for z >= -1/e, got {z!r}")


def _halley(w: float, z: float) -> float:
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - z
        wp1 = w + 1.0
        if wp1 == 0.0 or f == 0.0:
            return w
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if abs(dw) <= 4 * _EPS * (1.0 + abs(w)):
            return w
    return w


def _newton_log(w: float, z: float) -> float:
    # w + ln w = ln z; avoids overflow of exp(w) for huge z
    lz = math.log(z)
    for _ in range(100):
        dw = (w + math.log(w) - lz) / (1.0 + 1.0 / w)
        w -= dw
        if abs(dw) <= 4 * _EPS * abs(w):
            break
    return w


def lambert_w0(z: float) -> float:
    """Principal branch W0(z) for real ``z >= -1/e``."""
    z = float(z)
    _check_branch_domain(z)
    if z == 0.0:
        return 0.0
    if math.isinf(z):
        return math.inf
    p = _branch_point_p(z)
    if p == 0.0:
        return -1.0
    if p < 0.8:
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
    elif z < 3.0:
        w = math.log1p(z)
    else:
        l1 = math.log(z)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    if z > 1e100:
        return _newton_log(w, z)
    return _halley(w, z)


def lambert_wm1(z: float) -> float:
    """Lower branch W_{-1}(z) for real ``-1/e <= z < 0``."""
    z = float(z)
    _check_branch_domain(z)
    if not z < 0.0:
        raise DomainError(f"W_-1 is real only for -1/e <= z < 0, got {z!r}")
    p = _branch_point_p(z)
    if p == 0.0:
        return -1.0
    if z < -0.25:
        w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p**3
    else:
        l1 = math.log(-z)
        l2 = math.log(-l1)
        w = l1 - l2 + l2 / l1
    return _halley(w, z)
