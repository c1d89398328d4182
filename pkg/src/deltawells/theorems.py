"""Numerical checks of the structural theorems about the spectrum.

* Perron-Frobenius: a diagonal shift of ``-Phi`` is entrywise positive, so
  the lowest branch is simple with a one-signed eigenvector.
* Ground state: simple level, nodeless positive wave function.
* Cauchy interlacing between Phi and its principal submatrices, and the
  resulting upward shift of every level when a center is removed.
* Feynman-Hellmann: ``d omega / d|E| = v^T (d Phi / d|E|) v > 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .eigen import branch_values, eigen_decompose
from .errors import IndexOutOfRange, NotEntrywisePositive
from .model import DeltaSystem, check_kappa, energy_from_kappa, kappa_from_energy
from .phimatrix import build_phi, build_phi_derivative
from .spectrum import Spectrum, find_bound_states
from .wavefunction import build_wavefunction, evaluate


@dataclass(frozen=True, eq=False)
class PerronReport:
    kappa: float
    shift: float
    epsilon: float
    top_eigenvalue: float
    spectral_gap: float
    top_eigenvector: np.ndarray
    all_entries_positive: bool
    dominance_margin: float

    @property
    def min_component(self) -> float:
        return float(self.top_eigenvector.min())

    @property
    def passed(self) -> bool:
        return (
            self.all_entries_positive
            and self.top_eigenvalue > 0
            and self.spectral_gap > 0
            and self.min_component > 0
            and self.dominance_margin > 0
        )

    @property
    def worst_margin(self) -> float:
        return float(min(self.top_eigenvalue, self.spectral_gap, self.min_component, self.dominance_margin))


def shifted_positive_matrix(system: DeltaSystem, kappa: float, ground_kappa: float, epsilon: float = 1e-6):
    """``-(Phi(kappa) - (1 + epsilon) s I)`` with ``s = 1 - g_min / kappa_ground``.

    ``s`` is the largest diagonal entry of Phi at the ground state.  A single
    well has ``s = 0``; the shift is then floored at ``epsilon``.
    """
    s = 1.0 - system.couplings.min() / ground_kappa
    shift = max((1.0 + epsilon) * s, epsilon)
    phi = build_phi(system, kappa).entries
    return shift * np.eye(system.n) - phi, shift


def perron_check(
    system: DeltaSystem,
    at_kappa: float,
    epsilon: float = 1e-6,
    ground_kappa: float | None = None,
) -> PerronReport:
    """Apply the Perron-Frobenius conclusions to the shifted matrix at ``at_kappa``.

    Raises
    ------
    NotEntrywisePositive
        When the shifted matrix has a non-positive entry at this kappa, so the
        theorem does not apply there.
    """
    at_kappa = check_kappa(at_kappa)
    if ground_kappa is None:
        ground_kappa = find_bound_states(system)[0].kappa
    m, shift = shifted_positive_matrix(system, at_kappa, ground_kappa, epsilon)
    if not np.all(m > 0):
        raise NotEntrywisePositive(
            f"shifted matrix has min entry {m.min():.3e} at kappa={at_kappa}"
        )
    dec = eigen_decompose(m)
    w, v = dec.eigenvalues, dec.eigenvectors
    top = float(w[-1])
    gap = float(w[-1] - w[-2]) if len(w) > 1 else np.inf
    dominance = float(top - np.abs(w[:-1]).max()) if len(w) > 1 else np.inf
    vec = v[:, -1]
    return PerronReport(at_kappa, shift, epsilon, top, gap, vec, True, dominance)


@dataclass(frozen=True)
class GroundStateReport:
    simple: bool
    gap_in_kappa: float
    positive_wavefunction: bool
    min_psi: float

    @property
    def passed(self) -> bool:
        return self.simple and self.gap_in_kappa > 0 and self.positive_wavefunction


def ground_state_check(system: DeltaSystem, samples: int = 10_000, spectrum: Spectrum | None = None) -> GroundStateReport:
    """Ground level simple, separated from the next level, and nodeless.

    ``gap_in_kappa`` is measured to the next level, or to the threshold
    ``kappa = 0`` when there is only one level.  Positivity is sampled on
    ``[a_1 - 10/kappa, a_N + 10/kappa]``.
    """
    spectrum = spectrum or find_bound_states(system)
    ground = spectrum[0]
    next_kappa = spectrum[1].kappa if len(spectrum) > 1 else 0.0
    wf = build_wavefunction(system, ground, 0)
    x = np.linspace(system.centers[0] - 10 / wf.kappa, system.centers[-1] + 10 / wf.kappa, samples)
    psi = evaluate(wf, x)
    return GroundStateReport(
        simple=ground.multiplicity == 1,
        gap_in_kappa=float(ground.kappa - next_kappa),
        positive_wavefunction=bool(np.all(psi > 0)),
        min_psi=float(psi.min()),
    )


@dataclass(frozen=True, eq=False)
class InterlacingReport:
    removed_index: int
    full_eigenvalues: np.ndarray
    sub_eigenvalues: np.ndarray
    violations: list = field(default_factory=list)
    worst_margin: float = np.inf

    @property
    def passed(self) -> bool:
        return not self.violations


def interlacing_violations(full, sub, slack: float = 1e-12):
    """Check ``l_1 <= m_1 <= l_2 <= ... <= m_{N-1} <= l_N`` (both ascending).

    Returns ``(violations, worst_margin)``; each violation is
    ``(lower, upper, amount)`` naming the two chain entries that are out of
    order by more than ``slack``.
    """
    full = np.asarray(full)
    sub = np.asarray(sub)
    violations = []
    margins = []
    for k, mu in enumerate(sub):
        for lower, upper, names in ((full[k], mu, ("full", k, "sub", k)), (mu, full[k + 1], ("sub", k, "full", k + 1))):
            margin = upper - lower
            margins.append(margin)
            if margin < -slack:
                violations.append((names, float(-margin)))
    return violations, float(min(margins)) if margins else np.inf


def interlacing_check(system: DeltaSystem, at_kappa: float, removed_index: int) -> InterlacingReport:
    """Interlacing of Phi(kappa) with its submatrix lacking row/column ``removed_index``.

    The slack is ``1e-12 * max(1, ||Phi||_inf)``.
    """
    if system.n < 2 or not 0 <= removed_index < system.n:
        raise IndexOutOfRange(f"cannot remove index {removed_index} from {system.n} centers")
    phi = build_phi(system, at_kappa).entries
    keep = np.arange(system.n) != removed_index
    full = eigen_decompose(phi).eigenvalues
    sub = eigen_decompose(phi[np.ix_(keep, keep)]).eigenvalues
    slack = 1e-12 * max(1.0, np.abs(phi).sum(axis=1).max())
    violations, worst = interlacing_violations(full, sub, slack)
    return InterlacingReport(removed_index, full, sub, violations, worst)


@dataclass(frozen=True, eq=False)
class RemovalReport:
    removed_index: int
    full_levels: np.ndarray
    reduced_levels: np.ndarray
    deltas: np.ndarray
    empty: bool = False

    @property
    def passed(self) -> bool:
        matched = len(self.reduced_levels) <= len(self.full_levels)
        return matched and bool(np.all(self.deltas >= -1e-10))

    @property
    def worst_margin(self) -> float:
        return float(self.deltas.min()) if len(self.deltas) else np.inf


def removal_shift_check(system: DeltaSystem, removed_index: int, full: Spectrum | None = None) -> RemovalReport:
    """Compare sorted levels (with multiplicity) before and after removing a center.

    ``deltas[k]`` is the k-th lowest reduced energy minus the k-th lowest full
    energy.  Unmatched surplus levels of the full system are ignored.
    Removing the only center yields an empty report with ``empty=True``.
    """
    if not 0 <= removed_index < system.n:
        raise IndexOutOfRange(f"index {removed_index} out of range for {system.n} centers")
    full = full or find_bound_states(system)
    full_levels = full.level_energies()
    if system.n == 1:
        return RemovalReport(removed_index, full_levels, np.array([]), np.array([]), empty=True)
    reduced_levels = find_bound_states(system.without(removed_index)).level_energies()
    k = min(len(full_levels), len(reduced_levels))
    deltas = reduced_levels[:k] - full_levels[:k]
    return RemovalReport(removed_index, full_levels, reduced_levels, deltas)


@dataclass(frozen=True, eq=False)
class MonotonicityReport:
    kappa_grid: np.ndarray
    rayleigh: np.ndarray
    min_rayleigh: float
    min_increment: float

    @property
    def passed(self) -> bool:
        return self.min_rayleigh > 0 and self.min_increment >= -1e-10


def rayleigh_derivatives(system: DeltaSystem, kappa: float) -> np.ndarray:
    """``v_k^T (d Phi / d|E|) v_k`` for every sorted branch k at ``kappa``."""
    v = eigen_decompose(build_phi(system, kappa)).eigenvectors
    d = build_phi_derivative(system, kappa).entries
    return np.einsum("ik,ij,jk->k", v, d, v)


def monotonicity_check(system: DeltaSystem, kappa_grid) -> MonotonicityReport:
    """Rayleigh form of the branch derivatives and forward differences along the grid."""
    grid = np.asarray(kappa_grid, dtype=float)
    rayleigh = np.array([rayleigh_derivatives(system, k) for k in grid])
    values = np.array([branch_values(system, k) for k in grid])
    increments = np.diff(values, axis=0)
    return MonotonicityReport(
        grid,
        rayleigh,
        float(rayleigh.min()),
        float(increments.min()) if len(increments) else np.inf,
    )


def derivative_fd_error(system: DeltaSystem, kappa: float, rel_step: float = 1e-6) -> float:
    """Largest entrywise relative error of d Phi / d|E| against a central difference in |E|."""
    c = system.constants
    e_abs = -energy_from_kappa(kappa, c)
    h = rel_step * e_abs
    up = build_phi(system, kappa_from_energy(-(e_abs + h), c)).entries
    down = build_phi(system, kappa_from_energy(-(e_abs - h), c)).entries
    fd = (up - down) / (2 * h)
    exact = build_phi_derivative(system, kappa).entries
    # far-apart entries can underflow to exactly zero on both sides
    err = np.abs(fd - exact) / np.maximum(np.abs(exact), np.finfo(float).tiny)
    return float(np.max(err))


def derivative_is_positive_definite(system: DeltaSystem, kappa: float) -> bool:
    """Cholesky succeeds and every leading principal minor is positive."""
    d = build_phi_derivative(system, kappa).entries
    try:
        np.linalg.cholesky(d)
    except np.linalg.LinAlgError:
        return False
    return all(np.linalg.det(d[:k, :k]) > 0 for k in range(1, system.n + 1))
