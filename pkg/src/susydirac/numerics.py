"""Uniform grids, quadrature, differentiation, and a Dirichlet eigensolver.

Everything downstream works on real functions tabulated on a uniform grid.
This module fixes the discretization contracts once:

* cumulative integrals use the composite trapezoid rule, which keeps the
  running integral of a nonnegative integrand monotone;
* derivatives use second-order central differences with second-order
  one-sided stencils at both ends;
* ``-d^2/dx^2 + V`` with box (Dirichlet) walls is diagonalized through a
  symmetric tridiagonal eigensolver, never a dense one.

All values are immutable after construction and all operations are pure, so
concurrent reads and independent solves need no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.linalg import eigh_tridiagonal


class NumericalError(RuntimeError):
    """An internal numerical consistency check or solver iteration failed."""


@dataclass(frozen=True)
class Grid:
    """Uniform 1D grid on [x_min, x_max] with n points, x_i = x_min + i*h.

    Parameters
    ----------
    x_min, x_max : float
        Interval endpoints, x_min < x_max.
    n : int
        Number of points, at least 3.
    """

    x_min: float
    x_max: float
    n: int

    def __post_init__(self) -> None:
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise ValueError("grid endpoints must be finite")
        if self.x_max <= self.x_min:
            raise ValueError("grid requires x_min < x_max")
        if self.n < 3:
            raise ValueError("grid requires at least 3 points")

    @property
    def h(self) -> float:
        """Grid spacing (x_max - x_min)/(n - 1)."""
        return (self.x_max - self.x_min) / (self.n - 1)

    @cached_property
    def points(self) -> np.ndarray:
        """Grid points x_i = x_min + i*h, read-only."""
        x = self.x_min + np.arange(self.n) * self.h
        x.setflags(write=False)
        return x


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """A real-valued function tabulated on a grid.

    Values are copied at construction, checked finite, and frozen.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float).copy()
        if vals.shape != (self.grid.n,):
            raise ValueError(
                f"expected {self.grid.n} samples, got shape {vals.shape}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("sampled values must all be finite")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with quadrature-normalized eigenvectors.

    ``continuum_edge`` marks the lowest scattering threshold when the caller
    knows it; levels above it are box artifacts of the Dirichlet walls.
    """

    eigenvalues: np.ndarray
    eigenvectors: tuple[SampledFunction, ...]
    continuum_edge: float | None = None

    def __post_init__(self) -> None:
        vals = np.asarray(self.eigenvalues, dtype=float).copy()
        vals.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        if len(self.eigenvectors) != vals.size:
            raise ValueError("eigenvector count must match eigenvalue count")
        if vals.size > 1 and np.any(np.diff(vals) < 0):
            raise ValueError("eigenvalues must be sorted ascending")
        for j, vec in enumerate(self.eigenvectors):
            norm = l2_norm(vec)
            if abs(norm - 1.0) > 1e-10:
                raise ValueError(f"eigenvector {j} has norm {norm}, not 1")


def l2_norm(f: SampledFunction) -> float:
    """Trapezoid-quadrature L2 norm of ``f`` over its grid."""
    return float(np.sqrt(np.trapezoid(f.values**2, dx=f.grid.h)))


def normalized(f: SampledFunction) -> SampledFunction:
    """Rescale ``f`` to unit L2 norm (sign untouched)."""
    norm = l2_norm(f)
    if norm == 0.0:
        raise ValueError("cannot normalize the zero function")
    return SampledFunction(f.grid, f.values / norm)


def cumulative_integral(f: SampledFunction) -> SampledFunction:
    """Running integral of ``f`` from x_min, by the composite trapezoid rule.

    The result starts at 0 and is non-decreasing whenever ``f`` is
    nonnegative; it is exact for affine integrands.
    """
    vals = cumulative_trapezoid(f.values, dx=f.grid.h, initial=0.0)
    return SampledFunction(f.grid, vals)


def derivative(f: SampledFunction) -> SampledFunction:
    """Second-order first derivative: central interior, one-sided ends."""
    return SampledFunction(
        f.grid, np.gradient(f.values, f.grid.h, edge_order=2)
    )


def hamiltonian_apply(v: SampledFunction, psi: SampledFunction) -> SampledFunction:
    """Apply the Dirichlet finite-difference matrix of -d^2/dx^2 + v to psi.

    The wall values of the result are 0, matching the matrix the eigensolver
    diagonalizes; use this for discrete residual checks.
    """
    if psi.grid != v.grid:
        raise ValueError("potential and state must share a grid")
    h = v.grid.h
    out = np.zeros(v.grid.n)
    p = psi.values
    out[1:-1] = (
        -(p[2:] - 2.0 * p[1:-1] + p[:-2]) / h**2 + v.values[1:-1] * p[1:-1]
    )
    return SampledFunction(v.grid, out)


def eigen_solve(
    v: SampledFunction, k: int, continuum_edge: float | None = None
) -> Spectrum:
    """Lowest ``k`` eigenpairs of -d^2/dx^2 + v with Dirichlet walls.

    The interior finite-difference matrix has diagonal 2/h^2 + v(x_i) and
    off-diagonal -1/h^2 and is diagonalized by a symmetric tridiagonal
    eigensolver (bisection + inverse iteration). Eigenvectors are extended by
    zeros at the walls, normalized under the trapezoid quadrature, and
    sign-fixed so the rightmost significant sample is positive.

    Raises
    ------
    ValueError
        If ``k`` is out of range (needs 1 <= k < n - 2).
    NumericalError
        If the eigensolver iteration fails to converge.
    """
    n = v.grid.n
    if not 1 <= k < n - 2:
        raise ValueError(f"k={k} out of range for a grid of {n} points")
    h = v.grid.h
    diag = 2.0 / h**2 + v.values[1:-1]
    off = np.full(n - 3, -1.0 / h**2)
    try:
        w, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"tridiagonal eigensolver failed: {exc}") from exc

    eigenvectors = []
    for j in range(k):
        full = np.zeros(n)
        full[1:-1] = vecs[:, j]
        full /= np.sqrt(np.trapezoid(full**2, dx=h))
        significant = np.nonzero(np.abs(full) > 1e-8 * np.abs(full).max())[0]
        if full[significant[-1]] < 0:
            full = -full
        eigenvectors.append(SampledFunction(v.grid, full))
    return Spectrum(w, tuple(eigenvectors), continuum_edge)


def bound_level_indices(spectrum: Spectrum) -> np.ndarray:
    """Indices of levels safely below the continuum edge.

    A level counts as bound only when E < edge - 10 h^2; Dirichlet walls
    discretize the continuum, and the margin keeps those box artifacts out.
    Without a known edge every level is returned.
    """
    if spectrum.continuum_edge is None:
        return np.arange(spectrum.eigenvalues.size)
    if not spectrum.eigenvectors:
        return np.arange(0)
    h = spectrum.eigenvectors[0].grid.h
    cutoff = spectrum.continuum_edge - 10.0 * h**2
    return np.nonzero(spectrum.eigenvalues < cutoff)[0]
