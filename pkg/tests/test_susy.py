"""Superpotential, partner pair, zero mode, and Dirac assembly contracts."""

from __future__ import annotations

import numpy as np
import pytest

from susydirac import (
    Grid,
    NumericalError,
    SampledFunction,
    Superpotential,
    apply_annihilation,
    apply_creation,
    bound_level_indices,
    dirac_spectrum,
    eigen_solve,
    expression_superpotential,
    kink_superpotential,
    l2_norm,
    partner_potentials,
    pt_superpotential,
    superpotential_from_zero_mode,
    zero_mode,
)


class TestSuperpotential:
    def test_kink_asymptotes_and_edge(self, kink):
        assert kink.f_minus == -2.0
        assert kink.f_plus == 2.0
        # [TRIVIAL] continuum edge is min(f_plus^2, f_minus^2)
        assert kink.continuum_edge == 4.0

    def test_from_samples_detects_asymptotes(self, production_grid):
        values = 2.0 * np.tanh(production_grid.points)
        sp = Superpotential.from_samples(
            SampledFunction(production_grid, values)
        )
        assert sp.f_minus == pytest.approx(-2.0, abs=1e-8)
        assert sp.f_plus == pytest.approx(2.0, abs=1e-8)

    def test_rejects_unsettled_tails(self):
        # tanh on [-5, 5] still varies by ~1e-4 in the outer 5%
        grid = Grid(-5.0, 5.0, 1001)
        with pytest.raises(ValueError):
            Superpotential.from_samples(
                SampledFunction(grid, np.tanh(grid.points))
            )


class TestPartnerPair:
    def test_kink_closed_forms_at_origin(self, kink_pair):
        n_mid = kink_pair.v_minus.grid.n // 2
        # [PAPER] V_minus(0) = -2 and V_plus(0) = 2 for f = 2 tanh x
        assert kink_pair.v_minus.values[n_mid] == pytest.approx(-2.0, abs=1e-12)
        assert kink_pair.v_plus.values[n_mid] == pytest.approx(2.0, abs=1e-12)

    def test_pair_sum_identity(self, kink, kink_pair):
        # Contract: v_minus + v_plus = 2 f^2 within 1e-8 on the full grid
        total = kink_pair.v_minus.values + kink_pair.v_plus.values
        assert np.abs(total - 2.0 * kink.f.values**2).max() <= 1e-8

    def test_closed_forms_on_full_grid(self, kink, kink_pair):
        x = kink.f.grid.points
        sech2 = 1.0 / np.cosh(x) ** 2
        # [PAPER] V_minus = 4 - 6 sech^2, V_plus = 4 - 2 sech^2
        assert np.abs(kink_pair.v_minus.values - (4.0 - 6.0 * sech2)).max() < 1e-10
        assert np.abs(kink_pair.v_plus.values - (4.0 - 2.0 * sech2)).max() < 1e-10


class TestZeroMode:
    def test_kink_zero_mode_profile(self, kink_mode):
        mode = kink_mode
        assert mode is not None
        assert mode.sector == "minus"
        x = mode.psi.grid.points
        n_mid = mode.psi.grid.n // 2
        # [PAPER] psi_0 = sqrt(3)/2 sech^2 x
        assert mode.psi.values[n_mid] == pytest.approx(
            np.sqrt(3.0) / 2.0, abs=1e-8
        )
        exact = np.sqrt(3.0) / 2.0 / np.cosh(x) ** 2
        assert np.abs(mode.psi.values - exact).max() < 1e-6

    def test_norm_is_one(self, kink_mode):
        assert l2_norm(kink_mode.psi) == pytest.approx(1.0, abs=1e-12)

    def test_reversed_kink_lands_in_plus_sector(self, production_grid):
        sp = Superpotential(
            f=SampledFunction(
                production_grid, -2.0 * np.tanh(production_grid.points)
            ),
            f_minus=2.0,
            f_plus=-2.0,
        )
        mode = zero_mode(sp)
        assert mode is not None
        assert mode.sector == "plus"
        n_mid = production_grid.n // 2
        assert mode.psi.values[n_mid] == pytest.approx(
            np.sqrt(3.0) / 2.0, abs=1e-8
        )

    def test_same_sign_asymptotes_have_no_mode(self, production_grid):
        sp = expression_superpotential("tanh(x) + 2", production_grid)
        assert zero_mode(sp) is None

    def test_indeterminate_asymptote_returns_none(self, production_grid):
        values = 1e-7 * np.tanh(production_grid.points)
        sp = Superpotential(
            f=SampledFunction(production_grid, values),
            f_minus=-1e-7,
            f_plus=1e-7,
        )
        assert zero_mode(sp) is None

    def test_annihilation_of_zero_mode(self):
        # needs h = 1e-3 for the 1e-6 bound; error scales like h^2
        grid = Grid(-20.0, 20.0, 40001)
        sp = kink_superpotential(grid)
        mode = zero_mode(sp)
        residual = apply_annihilation(sp, mode.psi)
        assert l2_norm(residual) <= 1e-6


class TestSuperpotentialFromZeroMode:
    def test_recovers_kink(self):
        grid = Grid(-18.0, 18.0, 36001)
        sp = kink_superpotential(grid)
        mode = zero_mode(sp)
        recovered = superpotential_from_zero_mode(mode.psi)
        x = grid.points
        mask = np.abs(x) <= 15.0
        exact = 2.0 * np.tanh(x)
        # [DERIVED] log-derivative of sech^2 recovers 2 tanh to O(h^2)
        assert np.abs(recovered.values[mask] - exact[mask]).max() < 1e-6

    def test_rejects_vanishing_interior(self, production_grid):
        values = np.abs(np.tanh(production_grid.points))
        with pytest.raises(ValueError):
            superpotential_from_zero_mode(
                SampledFunction(production_grid, values)
            )


class TestIntertwining:
    def test_annihilation_maps_between_sectors(self, kink_fine, kink_fine_pair):
        spectrum = eigen_solve(
            kink_fine_pair.v_minus, 4, continuum_edge=kink_fine.continuum_edge
        )
        excited = spectrum.eigenvectors[1]
        mapped = apply_annihilation(kink_fine, excited)
        mapped_values = mapped.values / l2_norm(mapped)

        partner = eigen_solve(
            kink_fine_pair.v_plus, 4, continuum_edge=kink_fine.continuum_edge
        )
        target = partner.eigenvectors[0].values
        # [DERIVED] probe: vector difference ~1.3e-6 at this resolution
        diff = min(
            np.abs(mapped_values - target).max(),
            np.abs(mapped_values + target).max(),
        )
        assert diff <= 1e-5

    def test_creation_maps_back(self, kink_fine, kink_fine_pair):
        partner = eigen_solve(
            kink_fine_pair.v_plus, 2, continuum_edge=kink_fine.continuum_edge
        )
        mapped = apply_creation(kink_fine, partner.eigenvectors[0])
        mapped_values = mapped.values / l2_norm(mapped)

        base = eigen_solve(
            kink_fine_pair.v_minus, 2, continuum_edge=kink_fine.continuum_edge
        )
        target = base.eigenvectors[1].values
        diff = min(
            np.abs(mapped_values - target).max(),
            np.abs(mapped_values + target).max(),
        )
        assert diff <= 1e-5

    def test_isospectrality_of_bound_levels(self, kink, kink_pair):
        e_minus = eigen_solve(
            kink_pair.v_minus, 8, continuum_edge=kink.continuum_edge
        )
        e_plus = eigen_solve(
            kink_pair.v_plus, 8, continuum_edge=kink.continuum_edge
        )
        bound_minus = e_minus.eigenvalues[bound_level_indices(e_minus)]
        bound_plus = e_plus.eigenvalues[bound_level_indices(e_plus)]
        assert bound_minus.size == bound_plus.size + 1
        assert np.abs(bound_minus[1:] - bound_plus).max() <= 1e-4


class TestDiracSpectrum:
    def test_kink_levels(self, kink):
        spectrum = dirac_spectrum(kink, 8)
        root3 = np.sqrt(3.0)
        # [PAPER] omega in {-sqrt(3), 0, +sqrt(3)} for the reflectionless well
        assert np.abs(
            spectrum.omegas - np.array([-root3, 0.0, root3])
        ).max() <= 1e-3
        assert spectrum.has_zero_mode
        assert spectrum.zero_mode_sector == "minus"
        assert spectrum.continuum_edge == 4.0

    def test_component_structure(self, kink):
        spectrum = dirac_spectrum(kink, 8)
        positives = [w for w in spectrum.omegas if w > 0]
        assert len(spectrum.upper_components) == len(positives)
        assert len(spectrum.lower_components) == len(positives)
        for upper, lower in zip(
            spectrum.upper_components, spectrum.lower_components
        ):
            assert l2_norm(lower) == pytest.approx(1.0, abs=1e-10)
            assert l2_norm(upper) == pytest.approx(1.0, abs=1e-3)

    def test_upper_component_is_mapped_lower(self, kink):
        spectrum = dirac_spectrum(kink, 8)
        lower = spectrum.lower_components[0]
        mapped = apply_annihilation(kink, lower)
        mapped_values = mapped.values / l2_norm(mapped)
        upper = spectrum.upper_components[0].values
        assert np.abs(mapped_values - upper / l2_norm(spectrum.upper_components[0])).max() < 1e-6

    def test_no_zero_mode_when_asymptotes_share_sign(self, production_grid):
        sp = expression_superpotential("tanh(x) + 2", production_grid)
        spectrum = dirac_spectrum(sp, 6)
        assert not spectrum.has_zero_mode
        assert 0.0 not in spectrum.omegas
        assert np.all(np.abs(np.array(spectrum.omegas)) > 0.5)
