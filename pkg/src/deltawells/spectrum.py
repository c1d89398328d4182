"""Bound-state spectra: numeric root search on the eigenvalue branches plus closed forms.

A bound state at ``kappa_B`` is a zero of some branch of Phi(kappa).  All
roots lie below the Gershgorin bound ``kappa_star`` returned by
:func:`bracket_kappa_max`.  Branches negative at ``kappa_lo = 1e-9 kappa_star``
are bisected on ``[kappa_lo, kappa_star]``; a branch that first dips below
zero under ``kappa_lo`` would be missed (the state would have
``|E| < 1e-18 |E_star|``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .eigen import eigen_decompose
from .errors import BadGeometry, NonPositiveStrength
from .lambertw import lambert_w0
from .model import DeltaSystem, PhysicalConstants, energy_from_kappa
from .phimatrix import build_phi
from .rootfind import bisect

KAPPA_LO_FACTOR = 1e-9
MERGE_RTOL = 1e-8
LADDER_RUNGS = 17


@dataclass(frozen=True, eq=False)
class BoundState:
    """One (possibly degenerate) bound level.

    ``null_vectors`` holds an orthonormal basis of the null space of
    Phi(kappa) as columns; component ``i`` is ``sqrt(lambda_i) psi(a_i)``.
    ``branch_kappas`` are the raw per-branch roots merged into this level.
    """

    energy: float
    kappa: float
    branch_indices: tuple[int, ...]
    null_vectors: np.ndarray
    branch_kappas: tuple[float, ...] = ()

    @property
    def multiplicity(self) -> int:
        return len(self.branch_indices)

    def to_dict(self) -> dict:
        return {
            "energy": self.energy,
            "kappa": self.kappa,
            "multiplicity": self.multiplicity,
            "branches": list(self.branch_indices),
            "branch_kappas": list(self.branch_kappas),
            "null_vectors": [list(map(float, col)) for col in self.null_vectors.T],
        }


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Bound states ordered from the most negative energy up.

    ``source`` is ``"phi"`` for roots of the secular matrix and
    ``"circulant"`` for roots of the ring-closure circulant model.
    """

    states: tuple[BoundState, ...]
    system: DeltaSystem
    kappa_star: float
    source: str = "phi"

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i):
        return self.states[i]

    @property
    def energies(self) -> np.ndarray:
        return np.array([s.energy for s in self.states])

    @property
    def multiplicities(self) -> list[int]:
        return [s.multiplicity for s in self.states]

    def level_energies(self) -> np.ndarray:
        """Energies repeated by multiplicity, ascending."""
        return np.repeat(self.energies, self.multiplicities)

    def to_dict(self, wavefunctions: bool = True) -> dict:
        out = {
            "kappa_star": self.kappa_star,
            "source": self.source,
            "system": self.system.to_dict(),
            "states": [s.to_dict() for s in self.states],
        }
        if wavefunctions:
            from .wavefunction import build_wavefunction

            for sd, state in zip(out["states"], self.states):
                sd["wavefunctions"] = [
                    {
                        "kappa": wf.kappa,
                        "anchors": list(map(float, wf.anchors)),
                        "coefficients": list(map(float, wf.coefficients)),
                    }
                    for wf in (build_wavefunction(self.system, state, i) for i in range(state.multiplicity))
                ]
        return out


def bracket_kappa_max(system: DeltaSystem) -> float:
    """Gershgorin bound ``(m / hbar^2) max_i sum_j sqrt(lambda_i lambda_j)``.

    Phi(kappa) is positive definite for every larger kappa.
    """
    g = system.couplings
    return float(np.max(np.sqrt(g) * np.sqrt(g).sum()))


def _certified_negative(value: float, matrix_scale: float, n: int) -> bool:
    # below kappa_lo the entries are ~1/kappa_lo, so sign is only trusted
    # beyond the rounding floor of the eigensolver
    return value < -8 * n * np.finfo(float).eps * matrix_scale


def branch_roots(
    values_at: Callable[[float], np.ndarray],
    n_branches: int,
    kappa_star: float,
    kappa_tol: float = 1e-12,
    scale_at: Callable[[float], float] | None = None,
) -> list[tuple[int, float]]:
    """Bisect every branch that is certifiably negative somewhere below ``kappa_star``.

    Branches increase with kappa, so a negative value anywhere implies a root
    above it.  The sign is probed on a log ladder from ``kappa_lo`` up to
    ``kappa_star / 10``: near the two-state threshold a branch can be
    negative by less than the rounding floor at ``kappa_lo`` (where entries
    are ~1/kappa_lo) yet clearly negative a few decades higher.

    ``values_at(kappa)`` returns all branch values; returns ``(branch, kappa)``
    pairs with 1-based branch indices.
    """
    ladder = kappa_star * np.geomspace(KAPPA_LO_FACTOR, 0.1, LADDER_RUNGS)
    lo = np.full(n_branches, np.nan)
    for kappa in ladder:
        values = values_at(kappa)
        scale = scale_at(kappa) if scale_at else np.abs(values).max()
        for k in range(n_branches):
            if _certified_negative(values[k], scale, n_branches):
                lo[k] = kappa
    at_hi = values_at(kappa_star)
    hi_noise = 8 * n_branches * np.finfo(float).eps * max(1.0, np.abs(at_hi).max())
    roots = []
    for k in range(n_branches):
        if np.isnan(lo[k]):
            continue
        # Phi(kappa_star) >= 0 exactly; a value within rounding of zero there
        # means the root is kappa_star itself (the single-well case)
        if abs(at_hi[k]) <= hi_noise:
            root = kappa_star
        else:
            root = bisect(lambda x: values_at(x)[k], float(lo[k]), kappa_star, kappa_tol)
        roots.append((k + 1, root))
    return roots


def cluster_roots(roots: list[tuple[int, float]], kappa_star: float) -> list[list[tuple[int, float]]]:
    """Group roots closer than ``1e-8 kappa_star``, largest kappa (deepest level) first."""
    ordered = sorted(roots, key=lambda r: (-r[1], r[0]))
    clusters: list[list[tuple[int, float]]] = []
    for r in ordered:
        if clusters and clusters[-1][-1][1] - r[1] <= MERGE_RTOL * kappa_star:
            clusters[-1].append(r)
        else:
            clusters.append([r])
    return clusters


def find_bound_states(system: DeltaSystem, kappa_tol: float = 1e-12) -> Spectrum:
    """All bound states of ``system``.

    Roots of each branch are located to relative width ``kappa_tol``, roots
    within ``1e-8 kappa_star`` of each other are merged into one degenerate
    level, and the null vectors are the eigenvectors of Phi(kappa_B) for the
    merged branches.
    """
    kstar = bracket_kappa_max(system)

    def values_at(kappa):
        return np.linalg.eigvalsh(build_phi(system, kappa).entries)

    def scale_at(kappa):
        return float(np.abs(build_phi(system, kappa).entries).sum(axis=1).max())

    roots = branch_roots(values_at, system.n, kstar, kappa_tol, scale_at)
    states = []
    for cluster in cluster_roots(roots, kstar):
        branches = tuple(sorted(b for b, _ in cluster))
        kappas = tuple(k for _, k in sorted(cluster))
        kappa_b = float(np.mean(kappas))
        decomposition = eigen_decompose(build_phi(system, kappa_b))
        vectors = decomposition.eigenvectors[:, [b - 1 for b in branches]].copy()
        vectors.setflags(write=False)
        states.append(
            BoundState(energy_from_kappa(kappa_b, system.constants), kappa_b, branches, vectors, kappas)
        )
    return Spectrum(tuple(states), system, kstar)


def single_center_energy(strength: float, constants: PhysicalConstants | None = None) -> float:
    """``-m lambda^2 / (2 hbar^2)``, the only level of one well."""
    c = constants or PhysicalConstants()
    if not strength > 0:
        raise NonPositiveStrength(f"strength must be positive, got {strength!r}")
    return -c.mass * strength**2 / (2.0 * c.hbar**2)


@dataclass(frozen=True)
class TwinLevels:
    """Closed-form levels of two equal wells; ``kappa_minus`` is None when unbound."""

    kappa_plus: float
    kappa_minus: float | None
    energy_plus: float
    energy_minus: float | None
    raw_kappa_minus: float = field(repr=False, default=0.0)

    @property
    def count(self) -> int:
        return 1 if self.kappa_minus is None else 2


def twin_levels(separation: float, strength: float, constants: PhysicalConstants | None = None) -> TwinLevels:
    """Levels of two wells of equal ``strength`` a distance ``separation`` apart.

    With ``g = m lambda / hbar^2``::

        kappa_+ = g + W0( a g exp(-a g)) / a    (always bound; the ground state)
        kappa_- = g + W0(-a g exp(-a g)) / a    (bound iff a g > 1)

    The principal branch is the right one for ``kappa_-``: when ``a g <= 1``
    it returns ``-a g`` and hence ``kappa_- = 0``, the trivial root.  The
    second state is reported when ``kappa_- > 1e-10 g``.
    """
    c = constants or PhysicalConstants()
    if not (separation > 0 and math.isfinite(separation)):
        raise BadGeometry(f"separation must be positive, got {separation!r}")
    if not strength > 0:
        raise NonPositiveStrength(f"strength must be positive, got {strength!r}")
    a = float(separation)
    g = c.coupling_scale * strength
    ag = a * g
    z = ag * math.exp(-ag)
    k_plus = g + lambert_w0(z) / a
    k_minus = g + lambert_w0(-z) / a
    bound = k_minus > 1e-10 * g
    return TwinLevels(
        kappa_plus=k_plus,
        kappa_minus=k_minus if bound else None,
        energy_plus=energy_from_kappa(k_plus, c),
        energy_minus=energy_from_kappa(k_minus, c) if bound else None,
        raw_kappa_minus=k_minus,
    )


def twin_closed_form(
    separation: float, strength: float, constants: PhysicalConstants | None = None
) -> tuple[float, float | None]:
    """``(E_plus, E_minus)`` of the twin-well system; ``E_minus`` is None if unbound."""
    levels = twin_levels(separation, strength, constants)
    return levels.energy_plus, levels.energy_minus


def degeneracy_report(spectrum: Spectrum) -> list[tuple[float, int, tuple[int, ...]]]:
    """``(energy, multiplicity, branch indices)`` per level."""
    return [(s.energy, s.multiplicity, s.branch_indices) for s in spectrum.states]
