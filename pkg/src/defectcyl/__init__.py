"""Bound-state spectrum of a particle in a defect cylinder with twin delta wells."""

from .model import (
    EnergyLevel,
    PhysicalParams,
    QuantumNumbers,
    bessel_order,
    coupling_strength_parameter,
    validate,
)
from .rootfind import RootResult, Tolerances, refine_with_derivative, solve_bracketed
from .specfun import (
    BesselEval,
    EvalMethod,
    ZeroApproxMode,
    bessel_j,
    bessel_j_derivative,
    bessel_zero,
    ln_gamma,
    zero_approx_table,
)
from .spectrum import (
    Classification,
    ReferenceState,
    SpectrumEntry,
    classification_disagreements,
    classify,
    critical_radius,
    radial_energy,
    spectrum_table,
    total_energy,
)
from .wells import (
    BoundState,
    analytic_limits,
    excited_state,
    excited_state_exists,
    f_profile,
    g_profile,
    ground_state,
)

__version__ = "0.1.0"

__all__ = [
    "BesselEval",
    "BoundState",
    "Classification",
    "EnergyLevel",
    "EvalMethod",
    "PhysicalParams",
    "QuantumNumbers",
    "ReferenceState",
    "RootResult",
    "SpectrumEntry",
    "Tolerances",
    "ZeroApproxMode",
    "analytic_limits",
    "bessel_j",
    "bessel_j_derivative",
    "bessel_order",
    "bessel_zero",
    "classification_disagreements",
    "classify",
    "coupling_strength_parameter",
    "critical_radius",
    "excited_state",
    "excited_state_exists",
    "f_profile",
    "g_profile",
    "ground_state",
    "ln_gamma",
    "radial_energy",
    "refine_with_derivative",
    "solve_bracketed",
    "spectrum_table",
    "total_energy",
    "validate",
    "zero_approx_table",
]
