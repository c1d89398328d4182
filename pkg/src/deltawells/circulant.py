"""Circulant model of N equal, equally spaced wells.

The coefficient list is closed into a ring: ``c_0 = 1 - g/kappa`` and

    c_j = c_{N-j} = -(g / kappa) exp(-kappa a min(j, N - j)),   j = 1 .. N-1.

Its eigenvalues are the discrete Fourier transform of the coefficients and
pair up, ``omega_j = omega_{N-j}``, so every level with ``0 < j < N/2`` is
exactly two-fold degenerate.

This matrix equals the secular matrix of the open chain only for N <= 2.
For N >= 3 the chain's matrix is Toeplitz with corner entries
``exp(-kappa (N-1) a)`` rather than ``exp(-kappa a)``.  The pairing is then
broken and the chain's levels are simple.  :func:`dense_deviation` measures
the gap.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import eigen_decompose
from .errors import AsymmetricCoefficients, NotCirculant
from .model import DeltaSystem, check_kappa, energy_from_kappa
from .phimatrix import build_phi
from .rootfind import bisect
from .spectrum import (
    KAPPA_LO_FACTOR,
    BoundState,
    Spectrum,
    _certified_negative,
    bracket_kappa_max,
    cluster_roots,
)

UNIFORM_RTOL = 1e-12
SCAN_SAMPLES = 2048


def equidistant_spacing(system: DeltaSystem, rtol: float = UNIFORM_RTOL) -> float:
    """Common spacing of an equidistant, equal-strength system.

    Raises
    ------
    NotCirculant
        If gaps or strengths differ by more than ``rtol`` (relative).
    """
    lam = system.strengths
    if np.any(np.abs(lam - lam[0]) > rtol * lam[0]):
        raise NotCirculant(f"strengths are not all equal: {lam.tolist()}")
    if system.n == 1:
        return 0.0
    gaps = np.diff(system.centers)
    if np.any(np.abs(gaps - gaps[0]) > rtol * gaps[0]):
        raise NotCirculant(f"centers are not equally spaced: {system.centers.tolist()}")
    return float(gaps.mean())


def circulant_coefficients(system: DeltaSystem, kappa: float) -> np.ndarray:
    """Ring-closure coefficients ``c_0 .. c_{N-1}`` at ``kappa``.

    Each ``c_j = c_{N-j}`` pair is evaluated once and stored twice.
    """
    kappa = check_kappa(kappa)
    a = equidistant_spacing(system)
    n = system.n
    g = system.couplings[0]
    c = np.empty(n)
    c[0] = 1.0 - g / kappa
    for j in range(1, n // 2 + 1):
        c[j] = c[n - j] = -(g / kappa) * np.exp(-kappa * a * j)
    c.setflags(write=False)
    return c


def circulant_matrix(coefficients) -> np.ndarray:
    """Dense circulant with first row ``coefficients`` (row i is shifted right by i)."""
    c = np.asarray(coefficients, dtype=float)
    n = len(c)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return c[idx]


def pairing_map(n: int) -> dict[int, int]:
    """``j -> N - j`` for each Fourier index that has a distinct partner."""
    return {j: n - j for j in range(1, n) if j != n - j}


@dataclass(frozen=True, eq=False)
class CirculantSpectrum:
    coefficients: np.ndarray
    eigenvalues: np.ndarray
    pairing: dict[int, int]

    @property
    def sorted_eigenvalues(self) -> np.ndarray:
        return np.sort(self.eigenvalues)


def circulant_eigenvalues(coefficients, rtol: float = 1e-12) -> CirculantSpectrum:
    """Eigenvalues ``omega_j = sum_k c_k zeta^{jk}``, indexed by ``j``.

    For palindromic coefficients the imaginary parts cancel pairwise, so
    ``omega_j = c_0 + sum_{k>=1} c_k cos(2 pi j k / N)``.  Each pair
    ``(j, N - j)`` is computed once and the value stored for both.
    """
    c = np.asarray(coefficients, dtype=float)
    n = len(c)
    scale = max(np.abs(c).max(), np.finfo(float).tiny)
    for j in range(1, n):
        if abs(c[j] - c[n - j]) > rtol * scale:
            raise AsymmetricCoefficients(f"c[{j}]={c[j]} differs from c[{n - j}]={c[n - j]}")
    k = np.arange(1, n)
    omega = np.empty(n)
    for j in range(n // 2 + 1):
        omega[j] = omega[(n - j) % n] = c[0] + np.sum(c[1:] * np.cos(2.0 * np.pi * j * k / n))
    omega.setflags(write=False)
    return CirculantSpectrum(c, omega, pairing_map(n))


def fourier_real_vectors(n: int, j: int) -> np.ndarray:
    """Real orthonormal eigenvectors of any N x N circulant for Fourier index ``j``.

    Columns are the cosine and sine combinations of ``(1, zeta^j, ...)``.
    For ``j = 0`` or ``2j = N`` there is only the cosine column.
    """
    i = np.arange(n)
    cos = np.cos(2.0 * np.pi * j * i / n)
    cols = [cos / np.linalg.norm(cos)]
    if j % n != 0 and 2 * j != n:
        sin = np.sin(2.0 * np.pi * j * i / n)
        cols.append(sin / np.linalg.norm(sin))
    return np.column_stack(cols)


def dense_deviation(system: DeltaSystem, kappa: float) -> float:
    """Max difference between sorted circulant eigenvalues and the eigenvalues of Phi."""
    circ = circulant_eigenvalues(circulant_coefficients(system, kappa)).sorted_eigenvalues
    dense = eigen_decompose(build_phi(system, kappa)).eigenvalues
    return float(np.abs(circ - dense).max())


def circulant_bound_states(system: DeltaSystem, kappa_tol: float = 1e-12) -> Spectrum:
    """Roots of the circulant eigenvalues ``omega_j(kappa)``, one search per pair.

    Levels come out with multiplicity 2 for paired indices, 1 otherwise.
    ``branch_indices`` hold the Fourier indices ``j``, and the null vectors
    are the real cosine/sine vectors from :func:`fourier_real_vectors`.
    """
    equidistant_spacing(system)
    n = system.n
    kstar = bracket_kappa_max(system)
    lo = KAPPA_LO_FACTOR * kstar

    def omega(kappa):
        return circulant_eigenvalues(circulant_coefficients(system, kappa)).eigenvalues

    # Ring branches need not increase with kappa (for even N the alternating
    # branch dips below zero and comes back), so every sign change on a
    # grid is bisected rather than only branches negative at kappa_lo.
    grid = np.geomspace(lo, kstar, SCAN_SAMPLES)
    values = np.array([omega(k) for k in grid])
    scale = np.abs(circulant_coefficients(system, lo)).sum()
    negative = values < 0
    negative[0] = [_certified_negative(v, scale, n) for v in values[0]]
    roots = []
    for j in range(n // 2 + 1):
        for i in np.flatnonzero(negative[:-1, j] != negative[1:, j]):
            root = bisect(lambda x: omega(x)[j], grid[i], grid[i + 1], kappa_tol)
            roots.append((j, root))
            if (n - j) % n != j:
                roots.append((n - j, root))

    states = []
    for cluster in cluster_roots(roots, kstar):
        indices = tuple(sorted(j for j, _ in cluster))
        kappas = tuple(k for _, k in sorted(cluster))
        kappa_b = float(np.mean(kappas))
        done = set()
        cols = []
        for j in indices:
            if j in done:
                continue
            done.update({j, (n - j) % n})
            cols.append(fourier_real_vectors(n, min(j, n - j) if j else 0))
        vectors = np.column_stack(cols)
        vectors.setflags(write=False)
        states.append(
            BoundState(energy_from_kappa(kappa_b, system.constants), kappa_b, indices, vectors, kappas)
        )
    return Spectrum(tuple(states), system, kstar, source="circulant")

