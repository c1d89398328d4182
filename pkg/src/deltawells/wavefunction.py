"""Bound-state wave functions as sums of decaying exponentials.

A level at ``kappa`` with null vector ``phi`` of Phi(kappa) has

    psi(x) = sum_i c_i exp(-kappa |x - a_i|),   c_i = sqrt(lambda_i) phi_i m / (hbar^2 kappa),

which satisfies ``psi(a_i) = phi_i / sqrt(lambda_i)`` exactly.  Between
centers ``psi'' = kappa^2 psi``.  At each center the slope jumps by
``-2 kappa c_i``, which equals ``-(2 m lambda_i / hbar^2) psi(a_i)`` precisely
when ``phi`` is a null vector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, KappaMismatch
from .model import DeltaSystem, check_kappa
from .spectrum import BoundState

KAPPA_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class PiecewiseExpWaveFunction:
    kappa: float
    anchors: np.ndarray
    coefficients: np.ndarray

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def norm(self) -> float:
        return math.sqrt(norm_squared(self))


def _pair_integrals(kappa: float, anchors: np.ndarray) -> np.ndarray:
    # int exp(-k|x-a|) exp(-k|x-b|) dx = exp(-k d) (d + 1/k), d = |a - b|
    d = np.abs(anchors[:, None] - anchors[None, :])
    return np.exp(-kappa * d) * (d + 1.0 / kappa)


def norm_squared(wf: PiecewiseExpWaveFunction) -> float:
    """Closed-form squared L2 norm."""
    c = wf.coefficients
    return float(c @ _pair_integrals(wf.kappa, wf.anchors) @ c)


def inner_product(wf1: PiecewiseExpWaveFunction, wf2: PiecewiseExpWaveFunction) -> float:
    """Closed-form L2 inner product of two wave functions on the same anchors and kappa."""
    _check_same_kappa(wf1, wf2)
    if not np.array_equal(wf1.anchors, wf2.anchors):
        raise ValueError("wave functions must share anchors")
    return float(wf1.coefficients @ _pair_integrals(wf1.kappa, wf1.anchors) @ wf2.coefficients)


def normalized(wf: PiecewiseExpWaveFunction) -> PiecewiseExpWaveFunction:
    c = wf.coefficients / math.sqrt(norm_squared(wf))
    c.setflags(write=False)
    return PiecewiseExpWaveFunction(wf.kappa, wf.anchors, c)


def from_null_vector(system: DeltaSystem, kappa: float, phi) -> PiecewiseExpWaveFunction:
    """Normalized wave function for an arbitrary vector ``phi`` at ``kappa``.

    Solves the Schroedinger equation only when ``phi`` is a null vector of
    Phi(kappa); see :func:`jump_condition_residuals`.
    """
    kappa = check_kappa(kappa)
    phi = np.asarray(phi, dtype=float)
    c = np.sqrt(system.strengths) * phi * system.constants.coupling_scale / kappa
    return normalized(PiecewiseExpWaveFunction(kappa, system.centers, c))


def build_wavefunction(system: DeltaSystem, state: BoundState, index: int = 0) -> PiecewiseExpWaveFunction:
    """Normalized wave function for null vector ``index`` of ``state``."""
    if not 0 <= index < state.multiplicity:
        raise IndexOutOfRange(f"state has multiplicity {state.multiplicity}, got index {index}")
    return from_null_vector(system, state.kappa, state.null_vectors[:, index])


def evaluate(wf: PiecewiseExpWaveFunction, x):
    x = np.asarray(x, dtype=float)
    d = np.abs(x[..., None] - wf.anchors)
    out = np.exp(-wf.kappa * d) @ wf.coefficients
    return float(out) if out.ndim == 0 else out


def derivative(wf: PiecewiseExpWaveFunction, x):
    """``psi'(x)``; at a center this is the average of the one-sided slopes."""
    x = np.asarray(x, dtype=float)
    diff = x[..., None] - wf.anchors
    out = (-wf.kappa * np.sign(diff) * np.exp(-wf.kappa * np.abs(diff))) @ wf.coefficients
    return float(out) if out.ndim == 0 else out


def one_sided_derivatives(wf: PiecewiseExpWaveFunction, i: int) -> tuple[float, float]:
    """``(psi'(a_i^-), psi'(a_i^+))`` from the analytic piecewise form."""
    base = derivative(wf, wf.anchors[i])
    kink = wf.kappa * wf.coefficients[i]
    return base + kink, base - kink


def second_derivative(wf: PiecewiseExpWaveFunction, x):
    """``psi''(x)`` away from the centers."""
    return wf.kappa**2 * evaluate(wf, x)


def sample(wf: PiecewiseExpWaveFunction, xmin: float, xmax: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    x = np.linspace(xmin, xmax, samples)
    return x, evaluate(wf, x)


def _interval_amplitudes(wf: PiecewiseExpWaveFunction, k: int) -> tuple[float, float]:
    """On ``(a_k, a_{k+1})``, ``psi = L exp(-kappa t) + R exp(kappa t)`` with ``t = x - a_k``."""
    a = wf.anchors
    c = wf.coefficients
    left = float(np.sum(c[: k + 1] * np.exp(-wf.kappa * (a[k] - a[: k + 1]))))
    right = float(np.sum(c[k + 1 :] * np.exp(-wf.kappa * (a[k + 1 :] - a[k]))))
    return left, right


def nodes(wf: PiecewiseExpWaveFunction, rtol: float = 1e-10) -> list[float]:
    """Zeros of ``psi``, found analytically interval by interval.

    Zeros at a center are reported when ``|psi(a_i)|`` is below ``rtol``
    times the largest ``|c_i|``.  The tails are single exponentials and
    never vanish.
    """
    a = wf.anchors
    scale = np.abs(wf.coefficients).max()
    found = [float(ai) for ai in a if abs(evaluate(wf, ai)) <= rtol * scale]
    for k in range(len(a) - 1):
        left, right = _interval_amplitudes(wf, k)
        if left * right >= 0:
            continue
        # L e^{-kt} + R e^{kt} = 0  ->  t = ln(-L/R) / (2 kappa)
        t = math.log(-left / right) / (2.0 * wf.kappa)
        width = a[k + 1] - a[k]
        if rtol * width < t < width * (1 - rtol):
            found.append(float(a[k] + t))
    return sorted(found)


def jump_condition_residuals(system: DeltaSystem, wf: PiecewiseExpWaveFunction, relative: bool = False) -> np.ndarray:
    """``|psi'(a_i^+) - psi'(a_i^-) + (2 m lambda_i / hbar^2) psi(a_i)|`` per center.

    With ``relative=True`` every residual is divided by the largest slope
    jump ``2 kappa |c_i|`` of the wave function.
    """
    psi_at = evaluate(wf, system.centers)
    jump = -2.0 * wf.kappa * wf.coefficients
    res = np.abs(jump + 2.0 * system.couplings * psi_at)
    if relative:
        res = res / max(np.abs(jump).max(), np.finfo(float).tiny)
    return res


def _check_same_kappa(wf1, wf2):
    if abs(wf1.kappa - wf2.kappa) > KAPPA_RTOL * max(wf1.kappa, wf2.kappa):
        raise KappaMismatch(f"kappa differs: {wf1.kappa} vs {wf2.kappa}")


def wronskian(wf1: PiecewiseExpWaveFunction, wf2: PiecewiseExpWaveFunction, x):
    """``psi2 psi1' - psi1 psi2'`` at ``x`` (constant on each open interval between centers)."""
    _check_same_kappa(wf1, wf2)
    return evaluate(wf2, x) * derivative(wf1, x) - evaluate(wf1, x) * derivative(wf2, x)


def orthonormal_pair(wf1: PiecewiseExpWaveFunction, wf2: PiecewiseExpWaveFunction):
    """Gram-Schmidt in L2: returns ``(wf1 / |wf1|, component of wf2 orthogonal to wf1, normalized)``."""
    u = normalized(wf1)
    overlap = inner_product(u, wf2)
    v = PiecewiseExpWaveFunction(wf2.kappa, wf2.anchors, wf2.coefficients - overlap * u.coefficients)
    return u, normalized(v)
