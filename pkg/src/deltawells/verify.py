"""Run the theorem checks on one system and collect pass/fail/inapplicable records."""
from __future__ import annotations

import numpy as np

from .circulant import circulant_bound_states, dense_deviation, equidistant_spacing
from .errors import NotCirculant, NotEntrywisePositive, UnitMismatch
from .model import DeltaSystem
from .phimatrix import build_phi, gamma_phi_equivalence
from .spectrum import Spectrum, find_bound_states
from .theorems import (
    derivative_fd_error,
    derivative_is_positive_definite,
    ground_state_check,
    interlacing_check,
    monotonicity_check,
    perron_check,
    removal_shift_check,
)

SUITES = ("perron", "interlacing", "removal", "fh", "gamma", "degeneracy")

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


def _record(name, status, worst_margin, **details):
    return {"name": name, "status": status, "worst_margin": worst_margin, "details": details}


def check_grid(spectrum: Spectrum, samples: int = 20, low: float = 1e-2, high: float = 2.0) -> np.ndarray:
    """Log-spaced kappa samples on ``[low, high] * kappa_star``."""
    return np.geomspace(low * spectrum.kappa_star, high * spectrum.kappa_star, samples)


def check_perron(system: DeltaSystem, spectrum: Spectrum) -> dict:
    ground = ground_state_check(system, spectrum=spectrum)
    try:
        report = perron_check(system, spectrum[0].kappa, ground_kappa=spectrum[0].kappa)
    except NotEntrywisePositive as exc:
        return _record(
            "perron", INAPPLICABLE, None, reason=str(exc),
            ground_simple=ground.simple, ground_positive=ground.positive_wavefunction,
        )
    ok = report.passed and ground.passed
    return _record(
        "perron",
        PASS if ok else FAIL,
        min(report.worst_margin, ground.gap_in_kappa, ground.min_psi),
        kappa=report.kappa,
        shift=report.shift,
        top_eigenvalue=report.top_eigenvalue,
        spectral_gap=report.spectral_gap,
        min_component=report.min_component,
        ground_simple=ground.simple,
        ground_gap_in_kappa=ground.gap_in_kappa,
        ground_min_psi=ground.min_psi,
    )


def check_interlacing(system: DeltaSystem, spectrum: Spectrum) -> dict:
    if system.n < 2:
        return _record("interlacing", INAPPLICABLE, None, reason="needs at least two centers")
    worst = np.inf
    violations = []
    grid = check_grid(spectrum)
    for kappa in grid:
        for i in range(system.n):
            rep = interlacing_check(system, kappa, i)
            worst = min(worst, rep.worst_margin)
            violations.extend((float(kappa), i, v) for v in rep.violations)
    return _record(
        "interlacing", FAIL if violations else PASS, worst,
        kappa_samples=len(grid), violations=violations,
    )


def check_removal(system: DeltaSystem, spectrum: Spectrum) -> dict:
    if system.n < 2:
        return _record("removal", PASS, None, reason="single center: comparisons are vacuous")
    reports = [removal_shift_check(system, i, spectrum) for i in range(system.n)]
    ok = all(r.passed for r in reports)
    return _record(
        "removal", PASS if ok else FAIL, min(r.worst_margin for r in reports),
        deltas={str(r.removed_index): r.deltas for r in reports},
    )


def check_fh(system: DeltaSystem, spectrum: Spectrum) -> dict:
    grid = check_grid(spectrum, samples=50, low=1e-3)
    mono = monotonicity_check(system, grid)
    fd = max(derivative_fd_error(system, k) for k in grid[::5])
    pd = all(derivative_is_positive_definite(system, k) for k in grid[::5])
    ok = mono.passed and fd <= 1e-6 and pd
    return _record(
        "fh", PASS if ok else FAIL, mono.min_rayleigh,
        min_increment=mono.min_increment, max_fd_relative_error=fd, derivative_positive_definite=pd,
    )


def check_gamma(system: DeltaSystem, spectrum: Spectrum) -> dict:
    grid = check_grid(spectrum)
    try:
        reports = [gamma_phi_equivalence(system, k) for k in grid]
    except UnitMismatch as exc:
        return _record("gamma", INAPPLICABLE, None, reason=str(exc))
    dev = max(r.max_deviation for r in reports)
    inertia_ok = all(r.inertia_match for r in reports)
    det_err = max(r.det_ratio_error for r in reports)
    ok = dev <= 1e-12 and inertia_ok and det_err <= 1e-10
    details = {
        "max_deviation": dev,
        "inertia_match": inertia_ok,
        "det_phi_over_prod_lambda_det_gamma_error": det_err,
        "strength_product": reports[0].strength_product,
    }
    if np.isclose(reports[0].strength_product, 1.0, rtol=1e-14, atol=0):
        details["literal_det_equal"] = det_err <= 1e-10
    return _record("gamma", PASS if ok else FAIL, 1e-12 - dev, **details)


def check_degeneracy(system: DeltaSystem, spectrum: Spectrum) -> dict:
    """Consistency of the level structure; circulant-model levels reported alongside."""
    total = sum(spectrum.multiplicities)
    residual = 0.0
    for s in spectrum:
        phi = build_phi(system, s.kappa).entries
        residual = max(residual, float(np.abs(phi @ s.null_vectors).max()))
    ok = total <= system.n and residual <= 1e-9
    details = {
        "levels": [
            {"energy": s.energy, "multiplicity": s.multiplicity, "branches": list(s.branch_indices)}
            for s in spectrum
        ],
        "total_states": total,
        "max_null_residual": residual,
    }
    try:
        equidistant_spacing(system)
    except NotCirculant:
        details["circulant_model"] = None
    else:
        circ = circulant_bound_states(system)
        details["circulant_model"] = {
            "levels": [
                {"energy": s.energy, "multiplicity": s.multiplicity, "fourier_indices": list(s.branch_indices)}
                for s in circ
            ],
            "max_eigenvalue_deviation_from_phi": max(
                (dense_deviation(system, s.kappa) for s in circ), default=0.0
            ),
        }
    return _record("degeneracy", PASS if ok else FAIL, 1e-9 - residual, **details)


_CHECKS = {
    "perron": check_perron,
    "interlacing": check_interlacing,
    "removal": check_removal,
    "fh": check_fh,
    "gamma": check_gamma,
    "degeneracy": check_degeneracy,
}


def run_suite(system: DeltaSystem, suite: str = "all") -> list[dict]:
    """Run one named check, or all of them in a fixed order."""
    names = SUITES if suite == "all" else (suite,)
    unknown = [n for n in names if n not in _CHECKS]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from all, {', '.join(SUITES)}")
    spectrum = find_bound_states(system)
    return [_CHECKS[name](system, spectrum) for name in names]


def any_failed(records: list[dict]) -> bool:
    return any(r["status"] == FAIL for r in records)
