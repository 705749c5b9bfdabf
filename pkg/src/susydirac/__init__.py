"""Supersymmetric reduction of the 1D Dirac equation with a scalar potential.

The static Dirac problem with mass term ``f(x)`` squares into two partner
Schrodinger problems ``V = f^2 -/+ f'`` sharing every positive eigenvalue.
This package builds that pair on a grid, constructs the one-parameter family
of deformed potentials with the identical spectrum, tracks the regularized
spectral asymmetry, and checks everything against closed-form reflectionless
and trigonometric-well results.
"""

from .expressions import (
    EvalDomainError,
    ExprError,
    ExprSyntaxError,
    UnknownIdentifierError,
    evaluate,
    parse,
    sample,
    to_text,
)
from .family import (
    FamilyParameter,
    IsospectralMember,
    PoleError,
    annihilation_check,
    correction_residual,
    deformed_dirac_solutions,
    deformed_potential,
    deformed_superpotential,
    renormalized_zero_mode,
    riccati_residual,
)
from .numerics import (
    Grid,
    NumericalError,
    SampledFunction,
    Spectrum,
    bound_level_indices,
    cumulative_integral,
    derivative,
    eigen_solve,
    hamiltonian_apply,
    l2_norm,
    normalized,
)
from .poschl_teller import (
    LadderSpectra,
    PTParams,
    RegimeClassification,
    SingularityRegime,
    WholeLineLevel,
    ladder_spectra,
    legendre_zero_mode,
    params_from_strengths,
    pt_bound_energies,
    pt_bound_wavefunction,
    pt_to_partner_energy,
    singularity_regime,
    strengths_from_params,
    whole_line_bound_levels,
)
from .presets import (
    expression_superpotential,
    kink_superpotential,
    pt_superpotential,
)
from .susy import (
    DiracSpectrum,
    PartnerPair,
    Superpotential,
    ZeroMode,
    apply_annihilation,
    apply_creation,
    dirac_spectrum,
    partner_potentials,
    superpotential_from_zero_mode,
    zero_mode,
)
from .witten import (
    IndexCurve,
    index_analytic,
    index_curve,
    index_limit,
    index_numeric,
    index_ode_rhs,
)

__version__ = "0.1.0"

__all__ = [
    "DiracSpectrum",
    "EvalDomainError",
    "ExprError",
    "ExprSyntaxError",
    "FamilyParameter",
    "Grid",
    "IndexCurve",
    "IsospectralMember",
    "LadderSpectra",
    "NumericalError",
    "PTParams",
    "PartnerPair",
    "PoleError",
    "RegimeClassification",
    "SampledFunction",
    "SingularityRegime",
    "Spectrum",
    "Superpotential",
    "UnknownIdentifierError",
    "WholeLineLevel",
    "ZeroMode",
    "annihilation_check",
    "apply_annihilation",
    "apply_creation",
    "bound_level_indices",
    "correction_residual",
    "cumulative_integral",
    "deformed_dirac_solutions",
    "deformed_potential",
    "deformed_superpotential",
    "derivative",
    "dirac_spectrum",
    "eigen_solve",
    "evaluate",
    "expression_superpotential",
    "hamiltonian_apply",
    "index_analytic",
    "index_curve",
    "index_limit",
    "index_numeric",
    "index_ode_rhs",
    "kink_superpotential",
    "l2_norm",
    "ladder_spectra",
    "legendre_zero_mode",
    "normalized",
    "params_from_strengths",
    "parse",
    "partner_potentials",
    "pt_bound_energies",
    "pt_bound_wavefunction",
    "pt_superpotential",
    "pt_to_partner_energy",
    "renormalized_zero_mode",
    "riccati_residual",
    "sample",
    "singularity_regime",
    "strengths_from_params",
    "superpotential_from_zero_mode",
    "to_text",
    "whole_line_bound_levels",
    "zero_mode",
    "__version__",
]
