"""Small dense symmetric eigenproblems and eigenvalue-flow scans.

Branches are identified by sorted order: branch ``k`` (1-based) is the k-th
smallest eigenvalue of Phi(kappa).  Every smooth eigenvalue curve increases
with |E|, so sorted branches are nondecreasing in kappa and cross zero at
most once each.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadRange, BranchOutOfRange, NoConvergence
from .model import DeltaSystem, check_kappa
from .phimatrix import build_phi

MAX_SWEEPS = 50

# Eigenvalues closer than this (times the infinity norm) are treated as one
# degenerate cluster.
_CLUSTER_RTOL = 64 * np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal eigenvectors stored as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __iter__(self):
        return iter((self.eigenvalues, self.eigenvectors))


def jacobi_eigh(a, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations for a real symmetric matrix.

    Returns unsorted ``(w, v)`` with ``a @ v = v * w``.  Raises
    :class:`NoConvergence` if the off-diagonal mass has not dropped to
    rounding level after ``max_sweeps`` full sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return np.diag(a).copy(), v
    eps = np.finfo(float).eps
    for _ in range(max_sweeps):
        off = np.sqrt(2.0) * np.linalg.norm(np.triu(a, 1))
        if off <= eps * scale:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= eps * 1e-3 * scale:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * ap - s * aq, s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :], a[q, :] = c * ap - s * aq, s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
    raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def _canonical_sign(vec: np.ndarray) -> np.ndarray:
    # first component that is not rounding noise is made positive
    big = np.flatnonzero(np.abs(vec) > 1e-8 * np.abs(vec).max())
    return -vec if vec[big[0]] < 0 else vec


def _canonical_cluster_basis(vecs: np.ndarray) -> np.ndarray:
    """Orthonormal basis of span(vecs) built by projecting e_1, e_2, ... in order."""
    n, k = vecs.shape
    proj = vecs @ vecs.T
    basis = []
    for i in range(n):
        u = proj[:, i].copy()
        for _ in range(2):
            for b in basis:
                u -= (b @ u) * b
        norm = np.linalg.norm(u)
        if norm > 1e-6:
            basis.append(u / norm)
        if len(basis) == k:
            break
    return np.column_stack(basis)


def eigen_decompose(matrix, method: str = "lapack") -> EigenDecomposition:
    """Eigen-decomposition with deterministic output.

    Parameters
    ----------
    matrix : array_like or SpectralMatrix
        Real symmetric matrix.
    method : {"lapack", "jacobi"}
        ``"lapack"`` calls ``numpy.linalg.eigh``; ``"jacobi"`` uses
        :func:`jacobi_eigh`.

    Eigenvalues inside a numerically degenerate cluster are replaced by their
    mean, so they repeat exactly, and the cluster's eigenvectors are rebuilt
    by Gram-Schmidt on the projected canonical basis.  Each eigenvector is
    then sign-fixed so its first significant component is positive.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if method == "lapack":
        try:
            w, v = np.linalg.eigh(a)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(str(exc)) from None
    elif method == "jacobi":
        w, v = jacobi_eigh(a)
    else:
        raise ValueError(f"unknown method {method!r}")
    order = np.argsort(w, kind="stable")
    w = w[order].copy()
    v = v[:, order].copy()

    tol = _CLUSTER_RTOL * max(np.abs(a).sum(axis=1).max(), np.finfo(float).tiny)
    start = 0
    for stop in range(1, len(w) + 1):
        if stop == len(w) or w[stop] - w[stop - 1] > tol:
            if stop - start > 1:
                w[start:stop] = w[start:stop].mean()
                v[:, start:stop] = _canonical_cluster_basis(v[:, start:stop])
            start = stop
    for k in range(v.shape[1]):
        v[:, k] = _canonical_sign(v[:, k])
    w.setflags(write=False)
    v.setflags(write=False)
    return EigenDecomposition(w, v)


def branch_values(system: DeltaSystem, kappa: float) -> np.ndarray:
    """All branches at ``kappa``: the sorted eigenvalues of Phi(kappa)."""
    return np.linalg.eigvalsh(build_phi(system, kappa).entries)


def branch_value(system: DeltaSystem, k: int, kappa: float) -> float:
    """The k-th smallest eigenvalue (``1 <= k <= N``) of Phi(kappa)."""
    if not 1 <= k <= system.n:
        raise BranchOutOfRange(f"branch index must be in 1..{system.n}, got {k}")
    return float(branch_values(system, kappa)[k - 1])


@dataclass(frozen=True, eq=False)
class EigenFlow:
    """Sampled branches; ``branch_values[i, k]`` is branch ``k + 1`` at ``kappa_grid[i]``."""

    kappa_grid: np.ndarray
    branch_values: np.ndarray
    system: DeltaSystem

    def crossings(self) -> list[tuple[int, float]]:
        """(branch, kappa) for every sign change of a branch along the grid.

        Each bracketing grid interval is refined by bisection on the branch
        value itself, to relative width 1e-12.
        """
        from .rootfind import bisect

        found = []
        vals = self.branch_values
        for k in range(vals.shape[1]):
            neg = vals[:, k] < 0
            for i in np.flatnonzero(neg[:-1] & ~neg[1:]):
                lo, hi = self.kappa_grid[i], self.kappa_grid[i + 1]
                root = bisect(lambda x: branch_value(self.system, k + 1, x), lo, hi, 1e-12)
                found.append((k + 1, root))
        return found


def scan_flow(
    system: DeltaSystem, kappa_min: float, kappa_max: float, samples: int, spacing: str = "log"
) -> EigenFlow:
    """Evaluate every branch on a kappa grid (log-spaced unless ``spacing="linear"``)."""
    if not (kappa_min > 0 and kappa_max > kappa_min) or samples < 2:
        raise BadRange(
            f"need 0 < kappa_min < kappa_max and samples >= 2; got {kappa_min}, {kappa_max}, {samples}"
        )
    check_kappa(kappa_max)
    if spacing == "log":
        grid = np.geomspace(kappa_min, kappa_max, samples)
    elif spacing == "linear":
        grid = np.linspace(kappa_min, kappa_max, samples)
    else:
        raise BadRange(f"unknown grid spacing {spacing!r}")
    grid[0], grid[-1] = kappa_min, kappa_max
    values = np.array([branch_values(system, k) for k in grid])
    return EigenFlow(grid, values, system)
