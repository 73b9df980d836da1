"""Bound states of the one-dimensional Coulomb potential -e^2/|x|.

Closed-form spectrum and eigenfunctions, a verification suite that
re-derives every quantitative claim numerically, and a shooting solver
for the family of interface conditions at the origin.
"""

from .special import (
    N_MAX,
    RangeLimitError,
    SeriesControl,
    SeriesError,
    kummer_1f1,
    kummer_constant,
    laguerre_paper,
    laguerre_std,
)
from .states import (
    ATOMIC,
    EigenState,
    PhysicalScales,
    QuantumNumber,
    WavefunctionSample,
    energy,
    half_line_solution,
    make_state,
    normalization,
    phi,
    psi,
    psi_prime,
    psi_second,
    residue_kernel,
)
from .verify import (
    CheckResult,
    QuadratureSpec,
    VerificationReport,
    check_current_real,
    check_current_superposition,
    check_fourier_consistency,
    check_matching,
    check_normalization_constant,
    check_orthonormality,
    check_parseval,
    check_schrodinger_residual,
    check_semiclassical,
    default_quadrature,
    default_report,
    groundstate_rejection,
    probability_current,
    schrodinger_residual,
    semiclassical_time_ratio,
)
from .solver import (
    ExtensionParams,
    GridSpec,
    Level,
    ShootingConfig,
    SolverError,
    SpectrumResult,
    boundary_defect,
    deep_scan,
    eigenfunction,
    interface_residual,
    parity_label,
    shoot,
    solve_spectrum,
)

__version__ = "1.0.0"

__all__ = [
    "N_MAX",
    "RangeLimitError",
    "SeriesControl",
    "SeriesError",
    "kummer_1f1",
    "kummer_constant",
    "laguerre_paper",
    "laguerre_std",
    "ATOMIC",
    "EigenState",
    "PhysicalScales",
    "QuantumNumber",
    "WavefunctionSample",
    "energy",
    "half_line_solution",
    "make_state",
    "normalization",
    "phi",
    "psi",
    "psi_prime",
    "psi_second",
    "residue_kernel",
    "CheckResult",
    "QuadratureSpec",
    "VerificationReport",
    "check_current_real",
    "check_current_superposition",
    "check_fourier_consistency",
    "check_matching",
    "check_normalization_constant",
    "check_orthonormality",
    "check_parseval",
    "check_schrodinger_residual",
    "check_semiclassical",
    "default_quadrature",
    "default_report",
    "groundstate_rejection",
    "probability_current",
    "schrodinger_residual",
    "semiclassical_time_ratio",
    "ExtensionParams",
    "GridSpec",
    "Level",
    "ShootingConfig",
    "SolverError",
    "SpectrumResult",
    "boundary_defect",
    "deep_scan",
    "eigenfunction",
    "interface_residual",
    "parity_label",
    "shoot",
    "solve_spectrum",
    "__version__",
]
