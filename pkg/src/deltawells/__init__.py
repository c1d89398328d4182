"""Bound states of attractive Dirac delta wells in one dimension.

The spectrum is computed from the N x N secular matrix Phi(kappa): bound
states are the zeros of its eigenvalue branches.
"""
from .circulant import (
    circulant_bound_states,
    circulant_coefficients,
    circulant_eigenvalues,
    circulant_matrix,
)
from .eigen import EigenDecomposition, EigenFlow, branch_value, eigen_decompose, scan_flow
from .lambertw import lambert_w0, lambert_wm1
from .model import (
    DeltaSystem,
    PhysicalConstants,
    energy_from_kappa,
    equidistant_system,
    kappa_from_energy,
    load_system,
    validate_system,
)
from .phimatrix import SpectralMatrix, build_gamma, build_phi, build_phi_derivative, gamma_phi_equivalence
from .spectrum import (
    BoundState,
    Spectrum,
    bracket_kappa_max,
    degeneracy_report,
    find_bound_states,
    single_center_energy,
    twin_closed_form,
    twin_levels,
)
from .wavefunction import PiecewiseExpWaveFunction, build_wavefunction

__version__ = "0.1.0"
