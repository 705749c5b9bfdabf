"""Report figures rendered next to the delimited output.

Each CLI subcommand saves one PNG summarizing what its CSV files contain.
Rendering uses the Agg backend so no display is required; byte determinism
is promised for the CSV/JSON artifacts, not for the PNGs.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .family import IsospectralMember  # noqa: E402
from .numerics import SampledFunction  # noqa: E402
from .susy import DiracSpectrum, PartnerPair, ZeroMode  # noqa: E402

_FIGSIZE = (8.0, 5.0)


def _finish(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_partners_figure(
    path: Path, pair: PartnerPair, mode: ZeroMode | None
) -> Path:
    """Superpotential, both partner potentials, and the zero mode if any."""
    x = pair.superpotential.f.grid.points
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.plot(x, pair.superpotential.f.values, label="f", color="tab:gray")
    ax.plot(x, pair.v_minus.values, label="v_minus", color="tab:blue")
    ax.plot(x, pair.v_plus.values, label="v_plus", color="tab:orange")
    if mode is not None:
        ax.plot(
            x,
            mode.psi.values,
            label=f"zero mode ({mode.sector} sector)",
            color="tab:green",
        )
    ax.set_xlabel("x")
    ax.legend()
    ax.set_title("Partner potentials")
    return _finish(fig, path)


def save_family_figure(
    path: Path, members: Sequence[IsospectralMember], v_minus: SampledFunction
) -> Path:
    """Deformed potentials and zero modes overlaid across the lam sweep."""
    fig, (ax_pot, ax_mode) = plt.subplots(1, 2, figsize=(11.0, 4.5))
    x = v_minus.grid.points
    ax_pot.plot(x, v_minus.values, "k--", label="undeformed", linewidth=1)
    for member in members:
        label = f"lam = {member.lam.lam:g}"
        ax_pot.plot(x, member.potential.values, label=label)
        ax_mode.plot(x, member.zero_mode.values, label=label)
    ax_pot.set_xlabel("x")
    ax_pot.set_title("Isospectral potentials")
    ax_pot.legend(fontsize=8)
    ax_mode.set_xlabel("x")
    ax_mode.set_title("Deformed zero modes")
    ax_mode.legend(fontsize=8)
    return _finish(fig, path)


def save_dirac_figure(
    path: Path, spectra: dict[str, DiracSpectrum]
) -> Path:
    """Level diagram of the Dirac omegas per family member."""
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    labels = list(spectra)
    for i, label in enumerate(labels):
        spectrum = spectra[label]
        for omega in spectrum.omegas:
            ax.hlines(omega, i - 0.3, i + 0.3, color="tab:blue")
        edge = spectrum.continuum_edge**0.5
        ax.hlines(edge, i - 0.3, i + 0.3, color="tab:red", linestyle=":")
        ax.hlines(-edge, i - 0.3, i + 0.3, color="tab:red", linestyle=":")
    ax.set_xticks(range(len(labels)), labels, rotation=30, fontsize=8)
    ax.set_ylabel("omega")
    ax.set_title("Dirac levels (dotted: continuum edges)")
    return _finish(fig, path)


def save_index_figure(
    path: Path,
    betas: Sequence[float],
    analytic: Sequence[float],
    numeric: dict[float, float],
) -> Path:
    """Index curve over beta, with numeric heat-trace checks as markers."""
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.semilogx(betas, analytic, label="analytic", color="tab:blue")
    if numeric:
        ax.semilogx(
            list(numeric.keys()),
            list(numeric.values()),
            "o",
            label="numeric heat trace",
            color="tab:orange",
        )
    ax.set_xlabel("beta")
    ax.set_ylabel("index")
    ax.legend()
    ax.set_title("Regularized spectral asymmetry")
    return _finish(fig, path)


def save_pt_figure(
    path: Path,
    ell: int,
    analytic_minus: Sequence[float],
    numeric_minus: Sequence[float],
    analytic_plus: Sequence[float],
    numeric_plus: Sequence[float],
    edge: float,
) -> Path:
    """Analytic ladders against eigensolver levels for both partner sectors."""
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for offset, (ana, num, name) in enumerate(
        (
            (analytic_minus, numeric_minus, "lowered"),
            (analytic_plus, numeric_plus, "raised"),
        )
    ):
        for e in ana:
            ax.hlines(e, offset - 0.35, offset + 0.35, color="tab:blue")
        ax.plot([offset] * len(num), num, "x", color="tab:orange", markersize=9)
    ax.axhline(edge, color="tab:red", linestyle=":", label="continuum edge")
    ax.set_xticks([0, 1], ["lowered sector", "raised sector"])
    ax.set_ylabel("energy")
    ax.set_title(f"Bound ladders for ell = {ell} (lines analytic, x numeric)")
    ax.legend()
    return _finish(fig, path)
