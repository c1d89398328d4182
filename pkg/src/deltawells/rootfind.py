"""Bracketing bisection for monotone scalar functions."""
from __future__ import annotations

from typing import Callable


def bisect(f: Callable[[float], float], lo: float, hi: float, rtol: float = 1e-12) -> float:
    """Root of ``f`` in ``[lo, hi]`` to relative width ``rtol``.

    ``f(lo)`` and ``f(hi)`` must not have the same strict sign.  Returns an
    endpoint directly if ``f`` vanishes there, otherwise the midpoint of the
    final bracket.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo < 0) == (fhi < 0):
        raise ValueError(f"f({lo})={flo} and f({hi})={fhi} do not bracket a root")
    while hi - lo > rtol * max(abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)
