"""Regularized spectral asymmetry: closed form, ODE, limits, numerics."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from scipy.special import erfc

from susydirac import (
    Grid,
    IndexCurve,
    SampledFunction,
    Superpotential,
    index_analytic,
    index_curve,
    index_limit,
    index_numeric,
    index_ode_rhs,
)

ASYMPTOTES = [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0]


def _constant_superpotential(value: float) -> Superpotential:
    grid = Grid(-20.0, 20.0, 1001)
    return Superpotential(
        f=SampledFunction(grid, np.full(grid.n, value)),
        f_minus=value,
        f_plus=value,
    )


class TestAnalyticIndex:
    def test_frozen_kink_value(self):
        # [DERIVED] erf(1) at beta = 1/4 with asymptotes -2, +2
        assert index_analytic(2.0, -2.0, 0.25) == pytest.approx(
            0.8427007929497149, abs=1e-15
        )

    def test_rejects_nonpositive_beta(self):
        with pytest.raises(ValueError):
            index_analytic(2.0, -2.0, 0.0)

    @pytest.mark.parametrize(
        "f_plus,f_minus", list(itertools.product(ASYMPTOTES, ASYMPTOTES))
    )
    def test_antisymmetry_under_swap(self, f_plus, f_minus):
        for beta in (0.01, 1.0, 100.0):
            forward = index_analytic(f_plus, f_minus, beta)
            backward = index_analytic(f_minus, f_plus, beta)
            assert forward == pytest.approx(-backward, abs=1e-15)

    @pytest.mark.parametrize(
        "f_plus,f_minus", list(itertools.product(ASYMPTOTES, ASYMPTOTES))
    )
    def test_magnitude_bounded_by_one(self, f_plus, f_minus):
        for beta in np.logspace(-2, 3, 13):
            assert abs(index_analytic(f_plus, f_minus, beta)) <= 1.0 + 1e-9

    def test_monotone_for_kink_ordering(self):
        # strictly before double-precision saturation, weakly after
        betas = np.logspace(-2, 2, 41)
        deltas = np.array([index_analytic(2.0, -2.0, b) for b in betas])
        assert np.all(np.diff(deltas) >= 0)
        early = deltas[betas <= 1.0]
        assert np.all(np.diff(early) > 0)

    def test_saturation_bound(self):
        # [DERIVED] erfc(z) <= exp(-z^2) gives |Delta - 1| <= exp(-beta min f^2)
        for beta in (1.0, 2.0, 5.0, 10.0):
            gap = abs(index_analytic(2.0, -2.0, beta) - 1.0)
            assert gap <= np.exp(-beta * 4.0)


class TestOdeConsistency:
    @pytest.mark.parametrize(
        "f_plus,f_minus",
        [
            pair
            for pair in itertools.product(ASYMPTOTES, ASYMPTOTES)
            if pair[0] != pair[1]
        ],
    )
    def test_derivative_matches_rhs(self, f_plus, f_minus):
        # Finite difference in the erfc form avoids the large-beta
        # cancellation that a direct difference of erf values suffers.
        for beta in np.logspace(-2, 2, 25):
            delta = 1e-6 * beta
            lo, hi = beta - delta, beta + delta

            def stepped(value: float) -> float:
                sign = 1.0 if value >= 0 else -1.0
                return sign * (
                    erfc(abs(value) * np.sqrt(lo)) - erfc(abs(value) * np.sqrt(hi))
                )

            fd = (stepped(f_plus) - stepped(f_minus)) / (2.0 * (hi - lo))
            rhs = index_ode_rhs(f_plus, f_minus, beta)
            scale = (
                abs(f_plus) * np.exp(-beta * f_plus**2)
                + abs(f_minus) * np.exp(-beta * f_minus**2)
            ) / np.sqrt(4.0 * np.pi * beta)
            assert abs(fd - rhs) <= 1e-6 * max(scale, 1e-300)


class TestIndexLimit:
    def test_kink_limit_is_plus_one(self, kink):
        assert index_limit(kink) == 1

    def test_reversed_kink_limit_is_minus_one(self, production_grid):
        sp = Superpotential(
            f=SampledFunction(
                production_grid, -2.0 * np.tanh(production_grid.points)
            ),
            f_minus=2.0,
            f_plus=-2.0,
        )
        assert index_limit(sp) == -1

    def test_same_sign_gives_zero(self):
        assert index_limit(_constant_superpotential(1.0)) == 0

    def test_vanishing_asymptote_is_indeterminate(self, production_grid):
        sp = Superpotential(
            f=SampledFunction(
                production_grid, 1e-7 * np.tanh(production_grid.points)
            ),
            f_minus=-1e-7,
            f_plus=1e-7,
        )
        assert index_limit(sp) is None

    def test_constant_superpotential_index_is_exactly_zero(self):
        sp = _constant_superpotential(1.0)
        for beta in (0.1, 1.0, 10.0):
            assert index_analytic(sp.f_plus, sp.f_minus, beta) == 0.0


class TestNumericIndex:
    def test_matches_analytic_when_continuum_is_suppressed(self, kink):
        numeric = index_numeric(kink, 10.0, 40)
        analytic = index_analytic(2.0, -2.0, 10.0)
        # [DERIVED] probe: difference ~2e-4 at the default resolution
        assert abs(numeric - analytic) <= 1e-2

    def test_warns_when_continuum_leaks(self, kink):
        with pytest.warns(RuntimeWarning):
            index_numeric(kink, 0.5, 8)


class TestIndexCurve:
    def test_curve_matches_pointwise_values(self, kink):
        betas = np.logspace(-2, 2, 9)
        curve = index_curve(kink, betas)
        assert isinstance(curve, IndexCurve)
        expected = [index_analytic(2.0, -2.0, b) for b in betas]
        assert np.abs(curve.deltas - np.array(expected)).max() < 1e-15

    def test_rejects_unsorted_betas(self, kink):
        with pytest.raises(ValueError):
            index_curve(kink, np.array([1.0, 0.5, 2.0]))

    def test_rejects_out_of_range_deltas(self):
        with pytest.raises(ValueError):
            IndexCurve(
                betas=np.array([1.0, 2.0]), deltas=np.array([0.5, 1.5])
            )
