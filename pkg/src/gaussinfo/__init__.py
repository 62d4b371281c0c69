"""Gaussian bosonic states, their entropies, purifications, and the
one-mode attenuation/amplification channel, with the derived information
quantities (mutual information, loss, noise, coherent information)."""

from .channels import ExtendedOutput, GaussianChannel, elementary_occupation
from .entropy import (
    EntropyValue,
    SymplecticSpectrum,
    entropy,
    entropy_abs_form,
    entropy_from_matrices,
    entropy_from_occupation,
    entropy_squared_form,
    matrix_abs,
    spectrum_from_matrices,
    squared_sympeig_entropy,
    symplectic_spectrum,
    thermal_entropy,
)
from .exceptions import (
    GaussInfoError,
    InvalidStateError,
    NumericalFailureError,
    TruncationError,
    UnsupportedInputError,
)
from .fock import (
    FockDensityMatrix,
    attenuation_coefficients,
    beamsplitter_attenuate,
    partial_trace,
    thermal_fock,
    tmsv_fock,
    vn_entropy_fock,
)
from .purification import (
    BipartiteGaussianState,
    bipartite_complex_form,
    make_bipartite_state,
    matrix_sqrt_psd,
    partial_state,
    purify,
    purity_residual,
)
from .states import (
    CommutationContext,
    GaussianState,
    characteristic_function,
    complex_to_real,
    elementary_state,
    gauge_invariant_state,
    heisenberg_matrix,
    is_pure,
    make_context,
    make_gaussian_state,
    purity_defect,
    real_to_complex,
    state_from_dict,
    state_to_dict,
    vacuum_state,
)
from .triangle import InfoTriangle, coherent_zero_crossing, info_triangle, mutual_correlation

__version__ = "0.1.0"

__all__ = [
    "BipartiteGaussianState",
    "CommutationContext",
    "EntropyValue",
    "ExtendedOutput",
    "FockDensityMatrix",
    "GaussInfoError",
    "GaussianChannel",
    "GaussianState",
    "InfoTriangle",
    "InvalidStateError",
    "NumericalFailureError",
    "SymplecticSpectrum",
    "TruncationError",
    "UnsupportedInputError",
    "attenuation_coefficients",
    "beamsplitter_attenuate",
    "bipartite_complex_form",
    "characteristic_function",
    "coherent_zero_crossing",
    "complex_to_real",
    "elementary_occupation",
    "elementary_state",
    "entropy",
    "entropy_abs_form",
    "entropy_from_matrices",
    "entropy_from_occupation",
    "entropy_squared_form",
    "gauge_invariant_state",
    "heisenberg_matrix",
    "info_triangle",
    "is_pure",
    "make_bipartite_state",
    "make_context",
    "make_gaussian_state",
    "matrix_abs",
    "matrix_sqrt_psd",
    "mutual_correlation",
    "partial_state",
    "partial_trace",
    "purify",
    "purity_defect",
    "purity_residual",
    "real_to_complex",
    "spectrum_from_matrices",
    "squared_sympeig_entropy",
    "state_from_dict",
    "state_to_dict",
    "symplectic_spectrum",
    "thermal_entropy",
    "thermal_fock",
    "tmsv_fock",
    "vacuum_state",
    "vn_entropy_fock",
]
