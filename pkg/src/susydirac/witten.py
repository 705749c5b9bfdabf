"""Regularized spectral asymmetry (Witten index) of the partner pair.

The heat-kernel regularized index

    Delta(beta) = Tr[exp(-beta H_minus) - exp(-beta H_plus)]

depends only on the superpotential's asymptotes: it solves the flux equation

    d Delta / d beta = [f_plus exp(-beta f_plus^2)
                        - f_minus exp(-beta f_minus^2)] / sqrt(4 pi beta)

with Delta(0+) = 0, whose unique solution is

    Delta(beta) = erf(f_plus sqrt(beta))/2 - erf(f_minus sqrt(beta))/2.

As beta grows it saturates at +1/0/-1 according to the asymptote signs, which
is exactly the zero-mode existence rule. A desk-scale numerical check sums
exp(-beta E) over the two box spectra; the continuum parts cancel only up to
box error, so that check carries a documented 1e-2 tolerance.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import erf

from .numerics import eigen_solve
from .susy import ASYMPTOTE_FLOOR, Superpotential, partner_potentials


@dataclass(frozen=True, eq=False)
class IndexCurve:
    """Index values Delta(beta) along an ascending beta sweep."""

    betas: np.ndarray
    deltas: np.ndarray

    def __post_init__(self) -> None:
        betas = np.asarray(self.betas, dtype=float).copy()
        deltas = np.asarray(self.deltas, dtype=float).copy()
        if betas.shape != deltas.shape:
            raise ValueError("beta and delta arrays must match in length")
        if betas.size and (np.any(betas <= 0) or np.any(np.diff(betas) <= 0)):
            raise ValueError("betas must be positive and strictly ascending")
        if deltas.size and np.abs(deltas).max() > 1.0 + 1e-9:
            raise ValueError("index values cannot exceed 1 in magnitude")
        betas.setflags(write=False)
        deltas.setflags(write=False)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "deltas", deltas)


def index_analytic(f_plus: float, f_minus: float, beta: float) -> float:
    """Closed-form index erf(f_plus sqrt(beta))/2 - erf(f_minus sqrt(beta))/2."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    root = np.sqrt(beta)
    return float(0.5 * erf(f_plus * root) - 0.5 * erf(f_minus * root))


def index_ode_rhs(f_plus: float, f_minus: float, beta: float) -> float:
    """Right side of the flux equation for d Delta / d beta."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    return float(
        (f_plus * np.exp(-beta * f_plus**2) - f_minus * np.exp(-beta * f_minus**2))
        / np.sqrt(4.0 * np.pi * beta)
    )


def index_limit(f: Superpotential) -> int | None:
    """Saturation value of the index: +1, 0, or -1 from the asymptote signs.

    Returns None (indeterminate) when either asymptote sits within 1e-6 of
    zero; the sign rule does not decide those cases and we refuse to guess.
    """
    if min(abs(f.f_minus), abs(f.f_plus)) < ASYMPTOTE_FLOOR:
        return None
    if f.f_minus < 0 < f.f_plus:
        return 1
    if f.f_plus < 0 < f.f_minus:
        return -1
    return 0


def index_numeric(f: Superpotential, beta: float, k: int) -> float:
    """Box-spectrum heat traces: sum exp(-beta E_minus) - sum exp(-beta E_plus).

    Both partner spectra are truncated at k levels. The regulator must
    suppress the continuum for the truncation to make sense; when
    exp(-beta * edge) >= 1e-6 a RuntimeWarning flags likely contamination.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    edge = f.continuum_edge
    if np.exp(-beta * edge) >= 1e-6:
        warnings.warn(
            f"beta = {beta} does not suppress the continuum edge {edge}; "
            "the numeric index may be contaminated",
            RuntimeWarning,
            stacklevel=2,
        )
    pair = partner_potentials(f)
    e_minus = eigen_solve(pair.v_minus, k).eigenvalues
    e_plus = eigen_solve(pair.v_plus, k).eigenvalues
    return float(np.exp(-beta * e_minus).sum() - np.exp(-beta * e_plus).sum())


def index_curve(f: Superpotential, betas: np.ndarray) -> IndexCurve:
    """Analytic index evaluated along an ascending beta sweep."""
    betas = np.asarray(betas, dtype=float)
    deltas = np.array(
        [index_analytic(f.f_plus, f.f_minus, b) for b in betas]
    )
    return IndexCurve(betas, deltas)
