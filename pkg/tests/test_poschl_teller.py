"""Closed-form trigonometric-well oracles against the grid eigensolver."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from susydirac import (
    Grid,
    SampledFunction,
    SingularityRegime,
    eigen_solve,
    l2_norm,
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

PT_GRID = Grid(-10.0, 10.0, 2001)


def _pt_numeric_levels(c: float, k: int) -> np.ndarray:
    """FD oracle: levels of -(1/2) d^2/dx^2 + c sech^2, via doubling."""
    v = SampledFunction(PT_GRID, 2.0 * c / np.cosh(PT_GRID.points) ** 2)
    return eigen_solve(v, k).eigenvalues / 2.0


class TestParameterMaps:
    def test_round_trip_from_known_strengths(self):
        params = params_from_strengths(-3.0, 0.0)
        assert params.k1 == pytest.approx(1.75, abs=1e-14)
        assert params.k2 == pytest.approx(0.75, abs=1e-14)
        assert params.k1_alt == pytest.approx(-0.75, abs=1e-14)
        assert params.k2_alt == pytest.approx(0.25, abs=1e-14)
        c, s = strengths_from_params(params.k1, params.k2)
        assert c == pytest.approx(-3.0, abs=1e-12)
        assert s == pytest.approx(0.0, abs=1e-12)

    @given(
        k1=st.floats(0.5, 10.0, allow_nan=False),
        k2=st.floats(0.5, 10.0, allow_nan=False),
    )
    def test_round_trip_property(self, k1, k2):
        c, s = strengths_from_params(k1, k2)
        params = params_from_strengths(c, s)
        # principal branch: 2k - 1 >= 0 recovers the inputs
        assert params.k1 == pytest.approx(k1, abs=1e-9)
        assert params.k2 == pytest.approx(k2, abs=1e-9)
        assert params.k1_alt == pytest.approx(1.0 - k1, abs=1e-9)
        assert params.k2_alt == pytest.approx(1.0 - k2, abs=1e-9)

    def test_complex_regime_rejected(self):
        with pytest.raises(ValueError):
            params_from_strengths(1.0, 0.0)
        with pytest.raises(ValueError):
            params_from_strengths(0.0, -1.0)


class TestBoundEnergies:
    def test_even_and_odd_channels(self):
        # [PAPER] c = -3: even ground at -2, odd level at -1/2
        assert pt_bound_energies(1.75, 0.25) == pytest.approx([-2.0])
        assert pt_bound_energies(1.75, 0.75) == pytest.approx([-0.5])

    def test_shallow_channel_is_empty(self):
        assert pt_bound_energies(0.6, 0.25).size == 0
        assert pt_bound_energies(1.25, 0.75).size == 0

    def test_whole_line_union(self):
        levels = whole_line_bound_levels(-3.0)
        assert [lvl.energy for lvl in levels] == pytest.approx([-2.0, -0.5])
        assert [lvl.parity for lvl in levels] == ["even", "odd"]

    def test_whole_line_matches_fd_oracle(self):
        # [DERIVED] FD oracle on the same well
        numeric = _pt_numeric_levels(-3.0, 2)
        assert np.abs(numeric - np.array([-2.0, -0.5])).max() < 1e-3

    def test_parity_alternates_ascending(self):
        levels = whole_line_bound_levels(-6.0)
        assert [lvl.energy for lvl in levels] == pytest.approx(
            [-4.5, -2.0, -0.5]
        )
        assert [lvl.parity for lvl in levels] == ["even", "odd", "even"]


class TestLadderSpectra:
    @pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
    def test_ladder_values_and_degeneracy(self, ell):
        ladder = ladder_spectra(ell)
        expected = [ell**2 - (ell - j) ** 2 for j in range(ell)]
        assert ladder.e_minus == pytest.approx(expected)
        assert ladder.e_plus == pytest.approx(expected[1:])
        # partner ladders differ by exactly the zero level
        assert ladder.e_minus.size - ladder.e_plus.size == 1
        assert ladder.continuum_edge == ell**2

    def test_rejects_bad_ell(self):
        with pytest.raises(ValueError):
            ladder_spectra(0)
        with pytest.raises(ValueError):
            ladder_spectra(2.5)

    def test_partner_energy_conversion(self):
        # [PAPER] whole-line levels -2, -1/2 map to partner levels 0, 3
        assert pt_to_partner_energy(-2.0, 2) == 0.0
        assert pt_to_partner_energy(-0.5, 2) == 3.0
        ladder = ladder_spectra(2)
        converted = [
            pt_to_partner_energy(lvl.energy, 2)
            for lvl in whole_line_bound_levels(-3.0)
        ]
        assert converted == pytest.approx(ladder.e_minus)


class TestBoundWavefunctions:
    def test_terminating_series_required(self):
        with pytest.raises(ValueError):
            pt_bound_wavefunction(1.75, 0.25, 0.7, 0.5)

    def test_singular_channel_rejected(self):
        with pytest.raises(ValueError):
            pt_bound_wavefunction(1.75, 0.5, 1.0, 0.5)

    def test_even_ground_state_is_sech_squared(self):
        x = np.linspace(-5, 5, 101)
        psi = pt_bound_wavefunction(1.75, 0.25, 1.5, x)
        expected = 1.0 / np.cosh(x) ** 2
        # a = 0 terminates instantly: pure cosh power, no series factor
        assert np.abs(psi - expected).max() < 1e-14

    @pytest.mark.parametrize(
        "k2,k,level", [(0.25, 1.5, 0), (0.75, 1.0, 1)]
    )
    def test_matches_fd_eigenvectors(self, k2, k, level):
        v = SampledFunction(PT_GRID, -6.0 / np.cosh(PT_GRID.points) ** 2)
        spectrum = eigen_solve(v, 2)
        numeric = spectrum.eigenvectors[level].values

        analytic = pt_bound_wavefunction(1.75, k2, k, PT_GRID.points)
        analytic_fn = SampledFunction(PT_GRID, analytic)
        analytic = analytic / l2_norm(analytic_fn)
        # match the solver's sign convention at the right tail
        diff = min(
            np.abs(analytic - numeric).max(),
            np.abs(analytic + numeric).max(),
        )
        # [DERIVED] probe: ~9e-6 even, ~2e-5 odd at this resolution
        assert diff <= 1e-3

    def test_nontrivial_series_matches_fd(self):
        # c = -6, even channel, second level: the series has degree 1
        v = SampledFunction(PT_GRID, -12.0 / np.cosh(PT_GRID.points) ** 2)
        spectrum = eigen_solve(v, 3)
        numeric = spectrum.eigenvectors[2].values

        analytic = pt_bound_wavefunction(2.25, 0.25, 1.0, PT_GRID.points)
        analytic = analytic / l2_norm(SampledFunction(PT_GRID, analytic))
        diff = min(
            np.abs(analytic - numeric).max(),
            np.abs(analytic + numeric).max(),
        )
        assert diff <= 1e-3

    def test_scalar_input_gives_scalar(self):
        value = pt_bound_wavefunction(1.75, 0.25, 1.5, 0.0)
        assert isinstance(value, float)
        assert value == pytest.approx(1.0)


class TestLegendreZeroMode:
    @pytest.mark.parametrize(
        "ell,expected", [(1, 1.0 / np.sqrt(2.0)), (2, np.sqrt(3.0) / 2.0)]
    )
    def test_normalization_constants(self, ell, expected):
        # [DERIVED] 1/sqrt(B(1/2, ell)): 1/sqrt(2) and sqrt(3)/2
        assert legendre_zero_mode(ell, 0.0) == pytest.approx(expected, abs=1e-14)

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    def test_unit_norm(self, ell):
        grid = Grid(-20.0, 20.0, 4001)
        mode = SampledFunction(grid, legendre_zero_mode(ell, grid.points))
        assert l2_norm(mode) == pytest.approx(1.0, abs=1e-8)

    def test_rejects_bad_ell(self):
        with pytest.raises(ValueError):
            legendre_zero_mode(0, 0.0)


class TestSingularityRegimes:
    @pytest.mark.parametrize(
        "s,regime,on_boundary",
        [
            (-1.0, SingularityRegime.UNBOUNDED_BELOW, False),
            (-0.2, SingularityRegime.UNBOUNDED_BELOW, False),
            (-0.125, SingularityRegime.NEEDS_SELF_ADJOINT_EXTENSION, True),
            (-0.1, SingularityRegime.NEEDS_SELF_ADJOINT_EXTENSION, False),
            (0.0, SingularityRegime.REGULAR, False),
            (0.2, SingularityRegime.NEEDS_SELF_ADJOINT_EXTENSION, False),
            (0.375, SingularityRegime.NEEDS_SELF_ADJOINT_EXTENSION, True),
            (0.5, SingularityRegime.IMPENETRABLE_BARRIER, False),
            (10.0, SingularityRegime.IMPENETRABLE_BARRIER, False),
        ],
    )
    def test_thresholds(self, s, regime, on_boundary):
        verdict = singularity_regime(s)
        assert verdict.regime is regime
        assert verdict.on_boundary is on_boundary
