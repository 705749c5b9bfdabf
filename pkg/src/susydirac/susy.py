"""SUSY factorization of the 1D Dirac problem with a scalar potential.

A static scalar potential f(x) turns the Dirac equation into the pair of
Schrodinger problems

    H_minus = -d^2/dx^2 + (f^2 - f'),    H_plus = -d^2/dx^2 + (f^2 + f'),

factorized by the first-order operators (d/dx + f) and (-d/dx + f). The two
partners share every positive eigenvalue; the Dirac levels are omega =
+-sqrt(E), and a normalizable omega = 0 mode exists exactly when the
asymptotes of f change sign. Scattering starts at min(f(+inf)^2, f(-inf)^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.integrate import cumulative_simpson

from .numerics import (
    NumericalError,
    SampledFunction,
    Spectrum,
    bound_level_indices,
    derivative,
    eigen_solve,
    l2_norm,
    normalized,
)

# Asymptotes this close to 0 make the zero-mode sign rule indeterminate.
ASYMPTOTE_FLOOR = 1e-6

# Interior zero-mode samples at or below this make the log-derivative
# reconstruction meaningless.
POSITIVITY_FLOOR = 1e-300


@dataclass(frozen=True, eq=False)
class Superpotential:
    """A scalar potential f(x) with its asymptotic plateau values.

    ``f_derivative`` may carry an exact derivative when the caller knows one
    (the built-in presets do); partner construction then avoids stencil error.
    The grid must be wide enough that f has reached its plateaus at the walls.
    """

    f: SampledFunction
    f_minus: float
    f_plus: float
    f_derivative: SampledFunction | None = None

    def __post_init__(self) -> None:
        for value, name in ((self.f_minus, "f_minus"), (self.f_plus, "f_plus")):
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite")
        left = abs(self.f.values[0] - self.f_minus)
        right = abs(self.f.values[-1] - self.f_plus)
        if left > 1e-6 * max(1.0, abs(self.f_minus)):
            raise ValueError(
                f"f(x_min) = {self.f.values[0]} has not reached the "
                f"stated asymptote {self.f_minus}; widen the grid"
            )
        if right > 1e-6 * max(1.0, abs(self.f_plus)):
            raise ValueError(
                f"f(x_max) = {self.f.values[-1]} has not reached the "
                f"stated asymptote {self.f_plus}; widen the grid"
            )
        if self.f_derivative is not None and self.f_derivative.grid != self.f.grid:
            raise ValueError("f and f_derivative must share a grid")

    @classmethod
    def from_samples(
        cls,
        f: SampledFunction,
        f_minus: float | None = None,
        f_plus: float | None = None,
        f_derivative: SampledFunction | None = None,
    ) -> "Superpotential":
        """Build a superpotential, detecting asymptotes when not supplied.

        Each asymptote is read from the outermost 5% of grid points, which
        must be flat to 1e-6 (relative to max(1, |mean|)).
        """
        if f_minus is None:
            f_minus = _plateau(f.values[: max(2, f.grid.n // 20)], "left")
        if f_plus is None:
            f_plus = _plateau(f.values[-max(2, f.grid.n // 20):], "right")
        return cls(f, f_minus, f_plus, f_derivative)

    @property
    def continuum_edge(self) -> float:
        """Lowest scattering threshold min(f_plus^2, f_minus^2)."""
        return min(self.f_plus**2, self.f_minus**2)


def _plateau(window: np.ndarray, side: str) -> float:
    mean = float(window.mean())
    spread = float(window.max() - window.min())
    if spread > 1e-6 * max(1.0, abs(mean)):
        raise ValueError(
            f"superpotential is not flat at the {side} wall "
            f"(spread {spread:.3g}); widen the grid or supply asymptotes"
        )
    return mean


@dataclass(frozen=True, eq=False)
class PartnerPair:
    """The two partner potentials v_minus/v_plus with their superpotential."""

    superpotential: Superpotential
    v_minus: SampledFunction
    v_plus: SampledFunction

    def __post_init__(self) -> None:
        fsq = 2.0 * self.superpotential.f.values**2
        defect = np.abs(self.v_minus.values + self.v_plus.values - fsq).max()
        if defect > 1e-8:
            raise ValueError(
                f"v_minus + v_plus deviates from 2 f^2 by {defect:.3g}"
            )


@dataclass(frozen=True, eq=False)
class ZeroMode:
    """A normalizable omega = 0 mode and the partner sector it lives in.

    ``sector`` is "minus" when (d/dx + f) annihilates the mode (asymptotes
    f_minus < 0 < f_plus) and "plus" when (-d/dx + f) does.
    """

    psi: SampledFunction
    sector: Literal["minus", "plus"]


@dataclass(frozen=True, eq=False)
class DiracSpectrum:
    """Dirac levels omega (symmetric +- pairs) with spinor components.

    ``upper_components``/``lower_components`` are aligned with the positive
    omegas in ascending order; the -omega spinor reuses the same components
    with the lower one negated. The omega = 0 entry, present exactly when
    ``has_zero_mode``, stores its single component in ``zero_mode`` (lower
    component for a "minus"-sector mode, upper for "plus").
    """

    omegas: np.ndarray
    has_zero_mode: bool
    zero_mode: SampledFunction | None
    zero_mode_sector: Literal["minus", "plus"] | None
    upper_components: tuple[SampledFunction, ...]
    lower_components: tuple[SampledFunction, ...]
    continuum_edge: float

    def __post_init__(self) -> None:
        om = np.asarray(self.omegas, dtype=float).copy()
        om.setflags(write=False)
        object.__setattr__(self, "omegas", om)
        positive = om[om > 0]
        negative = -om[om < 0]
        if positive.size != negative.size or not np.allclose(
            np.sort(positive), np.sort(negative), rtol=0, atol=0
        ):
            raise ValueError("omega list must be symmetric under negation")
        if self.has_zero_mode != bool(np.any(om == 0)):
            raise ValueError("omega = 0 must be present iff a zero mode is")
        if len(self.upper_components) != positive.size or len(
            self.lower_components
        ) != positive.size:
            raise ValueError("need one component pair per positive omega")


def _operator_values(f: Superpotential | SampledFunction) -> SampledFunction:
    return f.f if isinstance(f, Superpotential) else f


def partner_potentials(f: Superpotential) -> PartnerPair:
    """Partner potentials v_minus = f^2 - f', v_plus = f^2 + f'.

    Uses the exact derivative when the superpotential carries one, else the
    second-order stencil.
    """
    fd = f.f_derivative if f.f_derivative is not None else derivative(f.f)
    fsq = f.f.values**2
    return PartnerPair(
        f,
        SampledFunction(f.f.grid, fsq - fd.values),
        SampledFunction(f.f.grid, fsq + fd.values),
    )


def apply_annihilation(
    f: Superpotential | SampledFunction, psi: SampledFunction
) -> SampledFunction:
    """Apply (d/dx + f) to psi.

    Annihilates the "minus"-sector zero mode and carries H_minus
    eigenvectors to H_plus eigenvectors at the same energy.
    """
    w = _operator_values(f)
    if psi.grid != w.grid:
        raise ValueError("superpotential and state must share a grid")
    return SampledFunction(
        w.grid, derivative(psi).values + w.values * psi.values
    )


def apply_creation(
    f: Superpotential | SampledFunction, psi: SampledFunction
) -> SampledFunction:
    """Apply (-d/dx + f) to psi (the adjoint map, H_plus back to H_minus)."""
    w = _operator_values(f)
    if psi.grid != w.grid:
        raise ValueError("superpotential and state must share a grid")
    return SampledFunction(
        w.grid, -derivative(psi).values + w.values * psi.values
    )


def zero_mode(f: Superpotential) -> ZeroMode | None:
    """The normalizable omega = 0 mode, or None when no sector admits one.

    For f_minus < 0 < f_plus the mode is exp(-integral of f), annihilated by
    (d/dx + f); for f_plus < 0 < f_minus it is exp(+integral of f) in the
    raised sector. Same-sign asymptotes give no normalizable mode, and
    asymptotes within 1e-6 of zero are treated as indeterminate: both return
    None. The exponent is accumulated with a cumulative Simpson rule; the
    trapezoid rule would cost two orders of magnitude in pointwise accuracy
    here, and monotonicity plays no role for this integrand.
    """
    if min(abs(f.f_minus), abs(f.f_plus)) < ASYMPTOTE_FLOOR:
        return None
    if f.f_minus < 0 < f.f_plus:
        sector: Literal["minus", "plus"] = "minus"
        sign = -1.0
    elif f.f_plus < 0 < f.f_minus:
        sector = "plus"
        sign = 1.0
    else:
        return None
    exponent = sign * cumulative_simpson(f.f.values, dx=f.f.grid.h, initial=0.0)
    psi = np.exp(exponent - exponent.max())
    return ZeroMode(normalized(SampledFunction(f.f.grid, psi)), sector)


def superpotential_from_zero_mode(psi0: SampledFunction) -> SampledFunction:
    """Recover f = -psi0'/psi0 from a strictly positive zero mode.

    Computed as the negative stencil derivative of log psi0, whose truncation
    error stays proportional to f'' instead of growing with the mode's decay
    rate. Interior samples at or below the 1e-300 floor are rejected; wall
    samples are clamped to the floor before the log.
    """
    if psi0.values[1:-1].min() <= POSITIVITY_FLOOR:
        raise ValueError(
            "zero mode must stay above the positivity floor on the interior"
        )
    logpsi = np.log(np.clip(psi0.values, POSITIVITY_FLOOR, None))
    return SampledFunction(
        psi0.grid, -np.gradient(logpsi, psi0.grid.h, edge_order=2)
    )


def dirac_spectrum(f: Superpotential, k: int) -> DiracSpectrum:
    """Assemble the Dirac levels omega = +-sqrt(E) from the lowered partner.

    Solves H_minus for k levels, keeps those below the continuum edge, and
    pairs each E > 0 into +-sqrt(E) with lower component psi_minus and upper
    component (d/dx + f) psi_minus / omega. The omega = 0 level comes from the
    integrated zero mode, which is exact where the eigensolver carries O(h^2)
    error; the eigensolver's lowest level only cross-checks it.
    """
    pair = partner_potentials(f)
    edge = f.continuum_edge
    spectrum = eigen_solve(pair.v_minus, k, continuum_edge=edge)
    bound = list(bound_level_indices(spectrum))
    mode = zero_mode(f)

    h = f.f.grid.h
    if mode is not None and mode.sector == "minus":
        if not bound or abs(spectrum.eigenvalues[bound[0]]) > 10.0 * h**2:
            found = spectrum.eigenvalues[bound[0]] if bound else "missing"
            raise NumericalError(
                f"zero mode exists but the lowest computed level is {found}, not 0"
            )
        bound = bound[1:]

    uppers: list[SampledFunction] = []
    lowers: list[SampledFunction] = []
    omegas_pos: list[float] = []
    for idx in bound:
        energy = float(spectrum.eigenvalues[idx])
        if energy <= 0:
            raise NumericalError(
                f"unpaired non-positive level {energy} below the continuum edge"
            )
        omega = float(np.sqrt(energy))
        lower = spectrum.eigenvectors[int(idx)]
        raised = apply_annihilation(f, lower)
        # dividing by the positive norm keeps the sign of (d/dx + f) psi
        upper = SampledFunction(raised.grid, raised.values / l2_norm(raised))
        omegas_pos.append(omega)
        uppers.append(upper)
        lowers.append(lower)

    full = [-w for w in reversed(omegas_pos)]
    if mode is not None:
        full.append(0.0)
    full.extend(omegas_pos)
    return DiracSpectrum(
        omegas=np.array(full),
        has_zero_mode=mode is not None,
        zero_mode=mode.psi if mode is not None else None,
        zero_mode_sector=mode.sector if mode is not None else None,
        upper_components=tuple(uppers),
        lower_components=tuple(lowers),
        continuum_edge=edge,
    )
