"""Problem instances: attractive delta wells on a line, and the E <-> kappa map.

All spectral work in this package is parameterized by the decay wavenumber
``kappa = sqrt(2 m |E|) / hbar`` rather than by the energy, since matrix
entries are smooth in kappa and the map to E is monotone.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import (
    DeltaWellsError,
    DuplicateCenter,
    EmptySystem,
    NonNegativeEnergy,
    NonPositiveConstant,
    NonPositiveKappa,
    NonPositiveStrength,
)

#: Relative tolerance (w.r.t. the span of the centers) below which two
#: centers are considered coincident.
CENTER_TOL = 1e-12


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant and particle mass.

    The defaults (hbar = 1, m = 1/2) are the "hbar = 2m = 1" units used for
    the twin-well flow plots and by the resolvent (Gamma) formulation.
    """

    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self):
        for name in ("hbar", "mass"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise NonPositiveConstant(f"{name} must be a positive finite number, got {value!r}")

    @property
    def coupling_scale(self) -> float:
        """m / hbar^2; multiply by a strength to get an inverse length."""
        return self.mass / self.hbar**2

    @property
    def is_resolvent_units(self) -> bool:
        return self.hbar == 1.0 and self.mass == 0.5


@dataclass(frozen=True, eq=False)
class DeltaSystem:
    """N attractive delta wells ``-lambda_i delta(x - a_i)``.

    Use :func:`validate_system` to build one from raw input; the constructor
    assumes its arguments are already sorted and checked.
    """

    centers: np.ndarray
    strengths: np.ndarray
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    @property
    def n(self) -> int:
        return len(self.centers)

    @property
    def couplings(self) -> np.ndarray:
        """Per-well inverse lengths ``m lambda_i / hbar^2``."""
        return self.constants.coupling_scale * self.strengths

    @property
    def distances(self) -> np.ndarray:
        """Matrix of pairwise distances ``|a_i - a_j|``."""
        return np.abs(self.centers[:, None] - self.centers[None, :])

    def without(self, index: int) -> "DeltaSystem":
        """Copy of the system with center ``index`` removed (N >= 2)."""
        keep = np.arange(self.n) != index
        return validate_system(self.centers[keep], self.strengths[keep], self.constants)

    def to_dict(self) -> dict:
        return {
            "hbar": self.constants.hbar,
            "mass": self.constants.mass,
            "centers": [float(a) for a in self.centers],
            "strengths": [float(s) for s in self.strengths],
        }

    def __repr__(self):
        return (
            f"DeltaSystem(centers={self.centers.tolist()}, strengths={self.strengths.tolist()}, "
            f"hbar={self.constants.hbar}, mass={self.constants.mass})"
        )


def validate_system(
    centers: Sequence[float],
    strengths: Sequence[float],
    constants: PhysicalConstants | None = None,
) -> DeltaSystem:
    """Check raw input and return a :class:`DeltaSystem` sorted by position.

    Strengths are permuted together with the centers.

    Raises
    ------
    EmptySystem, NonPositiveStrength, DuplicateCenter, NonPositiveConstant
    """
    if constants is None:
        constants = PhysicalConstants()
    a = np.asarray(centers, dtype=float).reshape(-1)
    lam = np.asarray(strengths, dtype=float).reshape(-1)
    if a.size == 0:
        raise EmptySystem("at least one center is required")
    if a.size != lam.size:
        raise DeltaWellsError(f"centers and strengths differ in length ({a.size} vs {lam.size})")
    if not np.all(np.isfinite(a)):
        raise DeltaWellsError("centers must be finite")
    if not np.all(np.isfinite(lam) & (lam > 0)):
        raise NonPositiveStrength(f"all strengths must be positive and finite, got {lam.tolist()}")

    order = np.argsort(a, kind="stable")
    a = a[order]
    lam = lam[order]
    if a.size >= 2:
        span = a[-1] - a[0]
        gaps = np.diff(a)
        if np.any(gaps <= CENTER_TOL * span) or span == 0:
            raise DuplicateCenter(f"centers must be distinct, got {a.tolist()}")
    a.setflags(write=False)
    lam.setflags(write=False)
    return DeltaSystem(a, lam, constants)


def equidistant_system(
    n: int, spacing: float, strength: float, constants: PhysicalConstants | None = None
) -> DeltaSystem:
    """``n`` equal wells at ``0, spacing, ..., (n - 1) spacing``."""
    return validate_system(np.arange(n) * float(spacing), np.full(n, float(strength)), constants)


def kappa_from_energy(energy: float, constants: PhysicalConstants | None = None) -> float:
    """``sqrt(2 m |E|) / hbar`` for a bound-state energy ``E < 0``."""
    c = constants or PhysicalConstants()
    if not energy < 0:
        raise NonNegativeEnergy(f"bound-state energies are negative, got {energy!r}")
    return math.sqrt(2.0 * c.mass * -energy) / c.hbar


def energy_from_kappa(kappa: float, constants: PhysicalConstants | None = None) -> float:
    """``-hbar^2 kappa^2 / (2 m)``; inverse of :func:`kappa_from_energy`."""
    c = constants or PhysicalConstants()
    check_kappa(kappa)
    return -(c.hbar * kappa) ** 2 / (2.0 * c.mass)


def check_kappa(kappa: float) -> float:
    if not (kappa > 0 and math.isfinite(kappa)):
        raise NonPositiveKappa(f"kappa must be positive and finite, got {kappa!r}")
    return float(kappa)


def system_from_dict(data: dict) -> DeltaSystem:
    """Build a system from the JSON input schema.

    ``{"hbar": h, "mass": m, "centers": [...], "strengths": [...]}`` with
    ``hbar`` and ``mass`` optional (defaults 1 and 0.5).
    """
    for key in ("centers", "strengths"):
        if key not in data:
            raise DeltaWellsError(f"missing field '{key}'")
        if not isinstance(data[key], list):
            raise DeltaWellsError(f"field '{key}' must be a list of numbers")
    try:
        constants = PhysicalConstants(float(data.get("hbar", 1.0)), float(data.get("mass", 0.5)))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, NonPositiveConstant):
            raise
        raise NonPositiveConstant(f"hbar/mass must be numbers: {exc}") from None
    return validate_system(data["centers"], data["strengths"], constants)


def load_system(path: str | Path) -> DeltaSystem:
    with open(path) as fh:
        return system_from_dict(json.load(fh))
