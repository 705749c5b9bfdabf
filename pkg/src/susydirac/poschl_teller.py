"""Closed-form Poschl-Teller oracles for the tanh-shaped superpotentials.

The solvable Hamiltonian here is

    H_pt = -(1/2) d^2/dx^2 + c / cosh^2 x + s / sinh^2 x,

parametrized by c = -[(2 k1 - 1)^2 - 1/4]/2 and s = [(2 k2 - 1)^2 - 1/4]/2.
Bound levels sit at E_k = -(2k - 1)^2 / 2 with k descending from k1 - k2 in
integer steps while k > 1/2. On the whole line with s = 0 the problem splits
into parity channels: regularity at the origin forces the sinh-exponent
2 k2 - 1/2 to be 0 (even channel, k2 = 1/4) or 1 (odd channel, k2 = 3/4), and
the full spectrum is the union of the two channel ladders, alternating parity
starting even. That union is what the finite-difference eigensolver sees.

A superpotential f = ell tanh x produces partner potentials that are this
Hamiltonian in disguise: with a unit kinetic term and shifted origin,
E_partner = 2 E_pt + ell^2, giving the ladders ell^2 - (ell - j)^2 below the
continuum edge ell^2. Bound states are terminating hypergeometric series,
hence elementary; the lowered sector's zero mode is proportional to
sech^ell x.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import beta as beta_function


class SingularityRegime(enum.Enum):
    """Behavior classes of the sinh^-2 singularity at the origin."""

    UNBOUNDED_BELOW = "unbounded_below"
    NEEDS_SELF_ADJOINT_EXTENSION = "needs_self_adjoint_extension"
    IMPENETRABLE_BARRIER = "impenetrable_barrier"
    REGULAR = "regular"


class RegimeClassification(NamedTuple):
    """A regime verdict plus whether s sat exactly on a regime boundary."""

    regime: SingularityRegime
    on_boundary: bool


class WholeLineLevel(NamedTuple):
    """One whole-line bound level: energy, ladder index k, channel, parity."""

    energy: float
    k: float
    k2: float
    parity: str


@dataclass(frozen=True)
class PTParams:
    """Strengths (c, s) with their index parameters (k1, k2).

    The principal branch takes 2 k - 1 >= 0; the alternate roots 1 - k1 and
    1 - k2 are recorded alongside. Construction re-derives (c, s) from
    (k1, k2) and requires agreement to 1e-12.
    """

    c: float
    s: float
    k1: float
    k2: float
    k1_alt: float
    k2_alt: float

    def __post_init__(self) -> None:
        c_back, s_back = strengths_from_params(self.k1, self.k2)
        if abs(c_back - self.c) > 1e-12 * max(1.0, abs(self.c)) or abs(
            s_back - self.s
        ) > 1e-12 * max(1.0, abs(self.s)):
            raise ValueError(
                f"(k1, k2) = ({self.k1}, {self.k2}) do not reproduce "
                f"(c, s) = ({self.c}, {self.s})"
            )


@dataclass(frozen=True, eq=False)
class LadderSpectra:
    """Partner-energy ladders of the superpotential ell * tanh x."""

    ell: int
    e_minus: np.ndarray
    e_plus: np.ndarray
    continuum_edge: float

    def __post_init__(self) -> None:
        e_minus = np.asarray(self.e_minus, dtype=float).copy()
        e_plus = np.asarray(self.e_plus, dtype=float).copy()
        if e_minus.size != self.ell or e_plus.size != self.ell - 1:
            raise ValueError("ladder lengths must be ell and ell - 1")
        if e_minus[0] != 0.0 or np.any(np.diff(e_minus) <= 0):
            raise ValueError("lowered ladder must ascend strictly from 0")
        if not np.array_equal(e_plus, e_minus[1:]):
            raise ValueError("raised ladder must equal the lowered one minus 0")
        if self.continuum_edge != float(self.ell**2):
            raise ValueError("continuum edge must be ell^2")
        e_minus.setflags(write=False)
        e_plus.setflags(write=False)
        object.__setattr__(self, "e_minus", e_minus)
        object.__setattr__(self, "e_plus", e_plus)


def strengths_from_params(k1: float, k2: float) -> tuple[float, float]:
    """Map index parameters back to strengths (c, s)."""
    c = -((2.0 * k1 - 1.0) ** 2 - 0.25) / 2.0
    s = ((2.0 * k2 - 1.0) ** 2 - 0.25) / 2.0
    return c, s


def params_from_strengths(c: float, s: float) -> PTParams:
    """Index parameters k1, k2 from the strengths, principal branch.

    Requires 1/4 - 2c >= 0 and 1/4 + 2s >= 0; outside that the parameters
    turn complex and the closed forms here do not apply.
    """
    rad1 = 0.25 - 2.0 * c
    rad2 = 0.25 + 2.0 * s
    if rad1 < 0 or rad2 < 0:
        raise ValueError(
            f"strengths (c, s) = ({c}, {s}) put the index parameters in the "
            "complex regime"
        )
    r1 = math.sqrt(rad1)
    r2 = math.sqrt(rad2)
    return PTParams(
        c=c,
        s=s,
        k1=(1.0 + r1) / 2.0,
        k2=(1.0 + r2) / 2.0,
        k1_alt=(1.0 - r1) / 2.0,
        k2_alt=(1.0 - r2) / 2.0,
    )


def pt_bound_energies(k1: float, k2: float) -> np.ndarray:
    """Channel ladder E_k = -(2k - 1)^2 / 2, k = k1 - k2, k1 - k2 - 1, ... > 1/2.

    Returns ascending energies; empty when k1 - k2 <= 1/2.
    """
    k_min = k1 - k2
    count = max(0, math.ceil(k_min - 0.5 - 1e-12))
    ks = k_min - np.arange(count)
    return -((2.0 * ks - 1.0) ** 2) / 2.0


def whole_line_bound_levels(c: float) -> tuple[WholeLineLevel, ...]:
    """Whole-line (s = 0) bound levels: union of the parity channels.

    The even channel uses k2 = 1/4 (sinh-exponent 0), the odd channel
    k2 = 3/4 (sinh-exponent 1); each contributes its own ladder and the union
    is returned ascending in energy, alternating parity starting even.
    """
    k1 = params_from_strengths(c, 0.0).k1
    levels: list[WholeLineLevel] = []
    for k2, parity in ((0.25, "even"), (0.75, "odd")):
        k_min = k1 - k2
        count = max(0, math.ceil(k_min - 0.5 - 1e-12))
        for j in range(count):
            k = k_min - j
            levels.append(
                WholeLineLevel(-((2.0 * k - 1.0) ** 2) / 2.0, k, k2, parity)
            )
    levels.sort(key=lambda lvl: lvl.energy)
    return tuple(levels)


def ladder_spectra(ell: int) -> LadderSpectra:
    """Bound ladders ell^2 - (ell - j)^2 of the partner pair for ell tanh x."""
    if not isinstance(ell, (int, np.integer)) or ell < 1:
        raise ValueError("ell must be a positive integer")
    e_minus = np.array([ell**2 - (ell - j) ** 2 for j in range(ell)], dtype=float)
    return LadderSpectra(
        ell=int(ell),
        e_minus=e_minus,
        e_plus=e_minus[1:],
        continuum_edge=float(ell**2),
    )


def pt_bound_wavefunction(k1: float, k2: float, k: float, x) -> np.ndarray | float:
    """Unnormalized bound state of the regular (s = 0) whole-line problem.

    The wavefunction is cosh^(−2 k1 + 3/2) x * sinh^(2 k2 − 1/2) x times a
    hypergeometric factor in z = -sinh^2 x that must terminate, i.e.
    k1 - k2 - k has to be a nonnegative integer; the result is then an
    elementary finite sum, evaluated iteratively. Accepts scalars or arrays.
    """
    if not (abs(k2 - 0.25) < 1e-12 or abs(k2 - 0.75) < 1e-12):
        raise ValueError(
            f"k2 = {k2} is outside the regular whole-line channels 1/4, 3/4"
        )
    a = -k1 + k2 + k
    degree = round(-a)
    if a > 1e-9 or degree < 0 or abs(a + degree) > 1e-9:
        raise ValueError(
            f"hypergeometric series does not terminate for (k1, k2, k) = "
            f"({k1}, {k2}, {k})"
        )
    b = -k1 + k2 - k + 1.0
    g = 2.0 * k2

    xs = np.asarray(x, dtype=float)
    z = -np.sinh(xs) ** 2
    total = np.ones_like(z)
    term = np.ones_like(z)
    for j in range(degree):
        term = term * ((-degree + j) * (b + j)) / ((g + j) * (1.0 + j)) * z
        total = total + term
    sinh_power = int(round(2.0 * k2 - 0.5))
    prefactor = np.cosh(xs) ** (-2.0 * k1 + 1.5) * np.sinh(xs) ** sinh_power
    out = prefactor * total
    return out if out.ndim else float(out)


def legendre_zero_mode(ell: int, x) -> np.ndarray | float:
    """L2-normalized zero mode sech^ell x of the superpotential ell tanh x.

    The normalization constant is 1/sqrt(B(1/2, ell)) with B the Euler beta
    function, since the line integral of sech^(2 ell) equals B(1/2, ell).
    """
    if not isinstance(ell, (int, np.integer)) or ell < 1:
        raise ValueError("ell must be a positive integer")
    xs = np.asarray(x, dtype=float)
    out = np.cosh(xs) ** (-float(ell)) / math.sqrt(beta_function(0.5, ell))
    return out if out.ndim else float(out)


def singularity_regime(s: float) -> RegimeClassification:
    """Classify the sinh^-2 strength s against the singularity thresholds.

    s = 0 is regular (no singular term at all); s < -1/8 makes the energy
    unbounded below; -1/8 < s < 3/8 leaves the Hamiltonian without a unique
    self-adjoint realization; s > 3/8 walls the half-lines off from each
    other. The classification uses strict inequalities, so the threshold
    values themselves are reported as needing a self-adjoint extension with
    the boundary flag set.
    """
    if s == 0.0:
        return RegimeClassification(SingularityRegime.REGULAR, False)
    if s == -0.125 or s == 0.375:
        return RegimeClassification(
            SingularityRegime.NEEDS_SELF_ADJOINT_EXTENSION, True
        )
    if s < -0.125:
        return RegimeClassification(SingularityRegime.UNBOUNDED_BELOW, False)
    if s < 0.375:
        return RegimeClassification(
            SingularityRegime.NEEDS_SELF_ADJOINT_EXTENSION, False
        )
    return RegimeClassification(SingularityRegime.IMPENETRABLE_BARRIER, False)


def pt_to_partner_energy(e_pt: float, ell: int) -> float:
    """Convert a half-kinetic-term energy to the partner scale: 2 e_pt + ell^2."""
    return 2.0 * e_pt + float(ell) ** 2
