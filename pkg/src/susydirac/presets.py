"""Built-in superpotentials and the expression-defined fallback.

The presets carry exact derivatives, so partner potentials built from them
are free of stencil error; expression-defined superpotentials fall back to
the second-order stencil and detected asymptotes.
"""

from __future__ import annotations

import numpy as np

from . import expressions
from .numerics import Grid, SampledFunction
from .susy import Superpotential


def kink_superpotential(grid: Grid) -> Superpotential:
    """The kink background f = 2 tanh x with exact derivative 2 sech^2 x.

    Partner potentials: 4 - 6 sech^2 x and 4 - 2 sech^2 x; one bound Dirac
    pair at omega = +-sqrt(3) plus the zero mode; continuum edge 4.
    """
    return pt_superpotential(grid, 2)


def pt_superpotential(grid: Grid, ell: int) -> Superpotential:
    """The tanh-ladder background f = ell tanh x, exact derivative ell sech^2 x.

    Its lowered partner holds bound levels ell^2 - (ell - j)^2, j < ell,
    below the continuum edge ell^2.
    """
    if not isinstance(ell, (int, np.integer)) or ell < 1:
        raise ValueError("ell must be a positive integer")
    x = grid.points
    f = SampledFunction(grid, ell * np.tanh(x))
    f_derivative = SampledFunction(grid, ell / np.cosh(x) ** 2)
    return Superpotential(
        f, f_minus=-float(ell), f_plus=float(ell), f_derivative=f_derivative
    )


def expression_superpotential(source: str, grid: Grid) -> Superpotential:
    """Superpotential from expression text, with detected asymptotes."""
    ast = expressions.parse(source)
    f = expressions.sample(ast, grid)
    return Superpotential.from_samples(f)
