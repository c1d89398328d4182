"""The secular matrix Phi(kappa), its |E|-derivative, and the resolvent matrix Gamma.

With ``g_i = m lambda_i / hbar^2`` and ``d_ij = |a_i - a_j|``::

    Phi_ii = 1 - g_i / kappa
    Phi_ij = -sqrt(g_i g_j) exp(-kappa d_ij) / kappa

Bound states sit at the kappa where Phi has a zero eigenvalue.  The momentum
integrals behind these entries are evaluated in closed form; nothing here
does quadrature.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import UnitMismatch
from .model import DeltaSystem, check_kappa


class MatrixKind(enum.Enum):
    PHI = "phi"
    GAMMA = "gamma"
    PHI_DERIVATIVE = "phi_derivative"


@dataclass(frozen=True, eq=False)
class SpectralMatrix:
    """A real symmetric matrix evaluated at one kappa."""

    entries: np.ndarray
    kappa: float
    kind: MatrixKind

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def _symmetric(diag: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """Assemble from a diagonal and a full matrix whose upper triangle is used.

    Each off-diagonal value is computed once and stored in both triangles so
    the result is exactly symmetric.
    """
    out = np.triu(upper, 1)
    out = out + out.T
    out[np.diag_indices_from(out)] = diag
    out.setflags(write=False)
    return out


def build_phi(system: DeltaSystem, kappa: float) -> SpectralMatrix:
    """Secular matrix of ``system`` at decay wavenumber ``kappa``."""
    kappa = check_kappa(kappa)
    g = system.couplings
    off = -np.sqrt(np.outer(g, g)) * np.exp(-kappa * system.distances) / kappa
    return SpectralMatrix(_symmetric(1.0 - g / kappa, off), kappa, MatrixKind.PHI)


def build_phi_derivative(system: DeltaSystem, kappa: float) -> SpectralMatrix:
    """Entrywise derivative ``d Phi / d|E|`` at ``kappa``.

    Differentiating through ``kappa(|E|)`` with ``d kappa / d|E| = m / (hbar^2 kappa)``
    gives ``(m / hbar^2) sqrt(g_i g_j) exp(-kappa d_ij) (1 + kappa d_ij) / kappa^3``
    for every entry, the diagonal included (``d_ii = 0``).  All entries are
    positive, and the matrix is positive definite.
    """
    kappa = check_kappa(kappa)
    g = system.couplings
    kd = kappa * system.distances
    full = system.constants.coupling_scale * np.sqrt(np.outer(g, g)) * np.exp(-kd) * (1.0 + kd) / kappa**3
    return SpectralMatrix(_symmetric(np.diag(full).copy(), full), kappa, MatrixKind.PHI_DERIVATIVE)


def build_gamma(system: DeltaSystem, kappa: float) -> SpectralMatrix:
    """Resolvent matrix Gamma restricted to the negative energy axis.

    Only defined in units hbar = 1, m = 1/2 (where ``sqrt|E| = kappa``)::

        Gamma_ii = 1/lambda_i - 1/(2 kappa)
        Gamma_ij = -exp(-kappa d_ij) / (2 kappa)

    Raises
    ------
    UnitMismatch
        If the system uses any other units.
    """
    kappa = check_kappa(kappa)
    if not system.constants.is_resolvent_units:
        raise UnitMismatch(
            "Gamma is only defined for hbar=1, mass=0.5; got "
            f"hbar={system.constants.hbar}, mass={system.constants.mass}"
        )
    off = -np.exp(-kappa * system.distances) / (2.0 * kappa)
    diag = 1.0 / system.strengths - 1.0 / (2.0 * kappa)
    return SpectralMatrix(_symmetric(diag, off), kappa, MatrixKind.GAMMA)


def inertia(matrix, rtol: float = 1e-12) -> tuple[int, int, int]:
    """(negative, zero, positive) eigenvalue counts.

    An eigenvalue counts as zero when its magnitude is below ``rtol`` times
    the largest eigenvalue magnitude.
    """
    w = np.linalg.eigvalsh(np.asarray(matrix))
    tol = rtol * max(np.abs(w).max(), np.finfo(float).tiny)
    return int(np.sum(w < -tol)), int(np.sum(np.abs(w) <= tol)), int(np.sum(w > tol))


@dataclass(frozen=True)
class EquivalenceReport:
    kappa: float
    max_deviation: float
    inertia_phi: tuple[int, int, int]
    inertia_gamma: tuple[int, int, int]
    det_phi: float
    det_gamma: float
    strength_product: float
    hadamard_bound: float

    @property
    def inertia_match(self) -> bool:
        return self.inertia_phi == self.inertia_gamma

    @property
    def det_ratio_error(self) -> float:
        """Error of ``det Phi = (prod lambda_i) det Gamma`` relative to the Hadamard bound of Phi.

        Near a bound state both determinants vanish, so the error is scaled by
        the product of Phi's row norms rather than by the determinants.
        """
        expected = self.strength_product * self.det_gamma
        return abs(self.det_phi - expected) / max(self.hadamard_bound, np.finfo(float).tiny)


def gamma_phi_equivalence(system: DeltaSystem, kappa: float) -> EquivalenceReport:
    """Compare ``S Gamma S^T`` with Phi for ``S = diag(sqrt(lambda_i))``.

    ``max_deviation`` is the largest entrywise difference divided by
    ``max(1, max|Phi_ij|)``.  Congruence preserves inertia, and it scales
    the determinant by ``prod(lambda_i)``, so literal determinant equality
    only holds when that product is 1.
    """
    gamma = build_gamma(system, kappa)
    phi = build_phi(system, kappa)
    s = np.sqrt(system.strengths)
    congruent = s[:, None] * gamma.entries * s[None, :]
    scale = max(1.0, np.abs(phi.entries).max())
    return EquivalenceReport(
        kappa=kappa,
        max_deviation=float(np.abs(congruent - phi.entries).max() / scale),
        inertia_phi=inertia(phi),
        inertia_gamma=inertia(gamma),
        det_phi=float(np.linalg.det(phi.entries)),
        det_gamma=float(np.linalg.det(gamma.entries)),
        strength_product=float(np.prod(system.strengths)),
        hadamard_bound=float(np.prod(np.linalg.norm(phi.entries, axis=1))),
    )
