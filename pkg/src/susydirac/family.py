"""One-parameter isospectral deformations built on the Riccati equation.

The raised partner v_plus admits a one-parameter family of factorizations:
around the particular Riccati solution f of F' + F^2 = v_plus, the general
solution is

    F(x) = f(x) + psi0(x)^2 / (lam + I(x)),    I(x) = integral of psi0^2,

with psi0 the normalized zero mode seeding the family. Refactorizing and
commuting the first-order operators yields the deformed potential
v_tilde = v_plus - 2 F' (equivalently F^2 - F'), which shares the full
spectrum of v_minus for every legal lam, and the deformed zero mode
sqrt(lam (lam + 1)) psi0 / (lam + I). Legal parameters are lam > 0 or
lam < -1; on that domain lam + I never changes sign, so the family is
pole-free by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import (
    NumericalError,
    SampledFunction,
    cumulative_integral,
    derivative,
    l2_norm,
)
from .susy import (
    DiracSpectrum,
    Superpotential,
    apply_creation,
    dirac_spectrum,
    partner_potentials,
)

# Guard band around the forbidden parameter boundary points {-1, 0}, where
# the deformed zero mode's normalization degenerates.
PARAMETER_GUARD = 1e-6

# Denominators closer to 0 than this are treated as poles.
POLE_GUARD = 1e-6


class PoleError(NumericalError):
    """The deformation denominator lam + I(x) approached zero."""


@dataclass(frozen=True)
class FamilyParameter:
    """Deformation parameter, restricted to lam < -1 or lam > 0 (strict).

    Values within 1e-6 of the excluded boundary points -1 and 0 are rejected
    at construction so every constructed member is unconditionally usable.
    """

    lam: float

    def __post_init__(self) -> None:
        if not np.isfinite(self.lam):
            raise ValueError("family parameter must be finite")
        if not (self.lam < -1.0 or self.lam > 0.0):
            raise ValueError(
                f"family parameter {self.lam} must satisfy lam < -1 or lam > 0"
            )
        if abs(self.lam) <= PARAMETER_GUARD or abs(self.lam + 1.0) <= PARAMETER_GUARD:
            raise ValueError(
                f"family parameter {self.lam} is inside the 1e-6 guard band "
                "around the excluded points 0 and -1"
            )


@dataclass(frozen=True, eq=False)
class IsospectralMember:
    """One lam-indexed member of the isospectral family.

    Fields
    ------
    lam : FamilyParameter
    superpotential : SampledFunction
        The deformed superpotential F.
    potential : SampledFunction
        The deformed potential v_tilde, isospectral with v_minus.
    zero_mode : SampledFunction
        The renormalized zero mode of ``potential``.
    seed_cumulative : SampledFunction
        Running integral I of the seed zero mode squared.
    """

    lam: FamilyParameter
    superpotential: SampledFunction
    potential: SampledFunction
    zero_mode: SampledFunction
    seed_cumulative: SampledFunction

    def __post_init__(self) -> None:
        cum = self.seed_cumulative.values
        if np.any(np.diff(cum) < 0):
            raise ValueError("seed cumulative integral must be non-decreasing")
        if abs(cum[-1] - 1.0) > 1e-6:
            raise ValueError(
                f"seed cumulative integral ends at {cum[-1]}, not 1; "
                "the seed must be a normalized zero mode"
            )
        denom = self.lam.lam + cum
        if np.abs(denom).min() < POLE_GUARD or not (
            np.all(denom > 0) or np.all(denom < 0)
        ):
            raise PoleError("deformation denominator changes sign or vanishes")
        norm = l2_norm(self.zero_mode)
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"deformed zero mode has norm {norm}, not 1")


def _denominator(
    psi0: SampledFunction, lam: FamilyParameter
) -> tuple[SampledFunction, np.ndarray]:
    """Running integral I of psi0^2 and the checked denominator lam + I."""
    cum = cumulative_integral(SampledFunction(psi0.grid, psi0.values**2))
    denom = lam.lam + cum.values
    if np.abs(denom).min() < POLE_GUARD:
        raise PoleError(
            f"lam + I(x) comes within {np.abs(denom).min():.3g} of zero "
            f"for lam = {lam.lam}"
        )
    if not (np.all(denom > 0) or np.all(denom < 0)):
        raise PoleError(f"lam + I(x) changes sign for lam = {lam.lam}")
    return cum, denom


def deformed_superpotential(
    f: Superpotential, psi0: SampledFunction, lam: FamilyParameter
) -> SampledFunction:
    """General Riccati solution F = f + psi0^2 / (lam + I) seeded by psi0."""
    _, denom = _denominator(psi0, lam)
    return SampledFunction(
        f.f.grid, f.f.values + psi0.values**2 / denom
    )


def riccati_residual(f_deformed: SampledFunction, v_plus: SampledFunction) -> float:
    """Max interior defect |F' + F^2 - v_plus| of a candidate solution F."""
    if f_deformed.grid != v_plus.grid:
        raise ValueError("candidate and potential must share a grid")
    resid = (
        derivative(f_deformed).values
        + f_deformed.values**2
        - v_plus.values
    )
    return float(np.abs(resid[1:-1]).max())


def correction_residual(f: Superpotential, phi: SampledFunction) -> float:
    """Max interior defect of the correction equation phi' + phi^2 + 2 f phi = 0.

    phi = F - f solves this exactly when F solves the Riccati equation.
    """
    if phi.grid != f.f.grid:
        raise ValueError("correction and superpotential must share a grid")
    resid = (
        derivative(phi).values
        + phi.values**2
        + 2.0 * f.f.values * phi.values
    )
    return float(np.abs(resid[1:-1]).max())


def renormalized_zero_mode(
    psi0: SampledFunction, lam: FamilyParameter
) -> SampledFunction:
    """Deformed zero mode sqrt(lam (lam + 1)) psi0 / (lam + I), unit norm.

    The analytic prefactor normalizes the mode exactly in the continuum; on a
    grid it is verified to reproduce unit quadrature norm within
    max(1e-6, h^2) and then the mode is renormalized under the quadrature, so
    downstream checks see the same normalization convention as eigenvectors.
    """
    _, denom = _denominator(psi0, lam)
    scale = np.sqrt(lam.lam * (lam.lam + 1.0))
    raw = SampledFunction(psi0.grid, scale * psi0.values / denom)
    norm = l2_norm(raw)
    tolerance = max(1e-6, psi0.grid.h**2)
    if abs(norm - 1.0) > tolerance:
        raise NumericalError(
            f"analytic normalization of the deformed zero mode is off by "
            f"{abs(norm - 1.0):.3g} (allowed {tolerance:.3g}); "
            "the seed is not a normalized zero mode of this problem"
        )
    return SampledFunction(psi0.grid, raw.values / norm)


def annihilation_check(
    f_deformed: SampledFunction, psi0_tilde: SampledFunction
) -> float:
    """L2 residual of the first-order equation (d/dx + F) psi0_tilde = 0."""
    resid = SampledFunction(
        psi0_tilde.grid,
        derivative(psi0_tilde).values + f_deformed.values * psi0_tilde.values,
    )
    return l2_norm(resid)


def deformed_potential(
    f: Superpotential, psi0: SampledFunction, lam: FamilyParameter
) -> IsospectralMember:
    """Construct the lam-member: F, v_tilde = v_plus - 2 F', deformed mode.

    The equivalent expression F^2 - F' is computed as an independent stencil
    path and must agree within max(1e-4, 10 h^2); both paths carry O(h^2)
    error, so the guard scales with the grid.
    """
    cum, denom = _denominator(psi0, lam)
    grid = f.f.grid
    f_def = SampledFunction(grid, f.f.values + psi0.values**2 / denom)
    v_plus = partner_potentials(f).v_plus
    d_f_def = derivative(f_def).values
    from_commutation = v_plus.values - 2.0 * d_f_def
    from_factorization = f_def.values**2 - d_f_def
    cross = np.abs(from_commutation - from_factorization)[1:-1].max()
    tolerance = max(1e-4, 10.0 * grid.h**2)
    if cross > tolerance:
        raise NumericalError(
            f"the two deformed-potential expressions disagree by {cross:.3g} "
            f"(allowed {tolerance:.3g})"
        )
    return IsospectralMember(
        lam=lam,
        superpotential=f_def,
        potential=SampledFunction(grid, from_commutation),
        zero_mode=renormalized_zero_mode(psi0, lam),
        seed_cumulative=cum,
    )


def deformed_dirac_solutions(
    member: IsospectralMember, f: Superpotential, k: int
) -> DiracSpectrum:
    """Dirac solutions of the deformed problem, rebuilt from the base ones.

    The upper components are unchanged; each lower component is rebuilt by
    applying (-d/dx + F) to the upper one at the same omega, and the omega = 0
    mode is the member's renormalized zero mode.
    """
    base = dirac_spectrum(f, k)
    if not base.has_zero_mode or base.zero_mode_sector != "minus":
        raise NumericalError(
            "deformed solutions need a base problem whose zero mode sits in "
            "the lowered sector"
        )
    lowers = []
    positive = base.omegas[base.omegas > 0]
    for omega, upper in zip(positive, base.upper_components):
        mapped = apply_creation(member.superpotential, upper)
        lowers.append(
            SampledFunction(mapped.grid, mapped.values / l2_norm(mapped))
        )
    return DiracSpectrum(
        omegas=base.omegas,
        has_zero_mode=True,
        zero_mode=member.zero_mode,
        zero_mode_sector="minus",
        upper_components=base.upper_components,
        lower_components=tuple(lowers),
        continuum_edge=base.continuum_edge,
    )
