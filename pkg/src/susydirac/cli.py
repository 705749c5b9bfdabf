"""Command-line front end: presets, config, CSV/JSON artifacts, figures.

One executable with five subcommands: ``partners`` (partner potentials and
zero mode), ``family`` (isospectral deformations), ``dirac`` (Dirac levels
and spinor components), ``index`` (spectral asymmetry sweep), and ``pt``
(closed-form ladders vs the eigensolver, plus singularity regimes).

Every run writes CSV files with fixed 17-significant-digit formatting and a
``run_summary.json`` embedding the fully resolved configuration, so identical
configs give byte-identical delimited output. Figures are rendered alongside
by default; ``--no-plot`` turns them off. Exit codes: 0 success, 2
configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import plotting
from .expressions import EvalDomainError, ExprError, parse as parse_expression
from .family import (
    FamilyParameter,
    IsospectralMember,
    annihilation_check,
    deformed_dirac_solutions,
    deformed_potential,
    riccati_residual,
)
from .numerics import (
    Grid,
    NumericalError,
    Spectrum,
    bound_level_indices,
    eigen_solve,
    l2_norm,
)
from .poschl_teller import (
    ladder_spectra,
    singularity_regime,
    whole_line_bound_levels,
)
from .presets import expression_superpotential, pt_superpotential
from .susy import DiracSpectrum, Superpotential, partner_potentials, zero_mode
from .witten import index_analytic, index_limit, index_ode_rhs

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

# Continuum suppression needed before the numeric heat trace is reported.
NUMERIC_INDEX_SUPPRESSION = 1e-6

_DEFAULTS: dict[str, object] = {
    "preset": "kink",
    "ell": 2,
    "f_expr": None,
    "x_min": -20.0,
    "x_max": 20.0,
    "n": 4001,
    "lambdas": (-3.0, -1.5, 0.5, 1.0, 10.0),
    "betas": tuple(np.logspace(-2.0, 3.0, 25)),
    "levels": 8,
    "out": ".",
    "s_values": (-1.0, -0.125, 0.0, 0.375, 0.5),
    "plots": True,
}


class ConfigError(Exception):
    """Invalid configuration; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run configuration (defaults < config file < flags)."""

    preset: str | None
    ell: int
    f_expr: str | None
    x_min: float
    x_max: float
    n: int
    lambdas: tuple[float, ...]
    betas: tuple[float, ...]
    levels: int
    out: Path
    s_values: tuple[float, ...]
    plots: bool

    def grid(self) -> Grid:
        return Grid(self.x_min, self.x_max, self.n)

    def resolved(self) -> dict:
        record = {}
        for spec in fields(self):
            record[spec.name] = getattr(self, spec.name)
        return _jsonify(record)


def _jsonify(value):
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonify(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, Path):
        return str(value)
    return value


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.17g}"


def write_csv(path: Path, header: list[str], rows) -> Path:
    """Write rows with 17-significant-digit floats and LF line endings."""
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_format_value(v) for v in row) + "\n")
    return path


def write_summary(
    cfg: RunConfig, command: str, files: list[Path], diagnostics: dict
) -> Path:
    payload = {
        "command": command,
        "config": cfg.resolved(),
        "files": sorted(p.name for p in files),
        "diagnostics": _jsonify(diagnostics),
    }
    path = cfg.out / "run_summary.json"
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return path


def _parse_float_list(text: str, flag: str) -> tuple[float, ...]:
    try:
        values = tuple(float(piece) for piece in text.split(",") if piece.strip())
    except ValueError as exc:
        raise ConfigError(f"{flag} expects a comma-separated float list: {exc}")
    if not values:
        raise ConfigError(f"{flag} must list at least one value")
    return values


def _parse_bool(text: str, key: str) -> bool:
    lowered = text.strip().lower()
    if lowered in {"true", "yes", "1", "on"}:
        return True
    if lowered in {"false", "no", "0", "off"}:
        return False
    raise ConfigError(f"{key} expects a boolean, got '{text}'")


def read_config_file(path: Path) -> dict[str, object]:
    """Flat key = value document mirroring the RunConfig fields."""
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    parsers = {
        "preset": str,
        "ell": int,
        "f_expr": str,
        "x_min": float,
        "x_max": float,
        "n": int,
        "lambda": lambda v: _parse_float_list(v, "lambda"),
        "beta": lambda v: _parse_float_list(v, "beta"),
        "levels": int,
        "out": str,
        "s_values": lambda v: _parse_float_list(v, "s_values"),
        "plots": lambda v: _parse_bool(v, "plots"),
    }
    renames = {"lambda": "lambdas", "beta": "betas"}
    entries: dict[str, object] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        if key not in parsers:
            raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
        try:
            parsed = parsers[key](value.strip())
        except (ValueError, ConfigError) as exc:
            raise ConfigError(f"{path}:{lineno}: {exc}")
        entries[renames.get(key, key)] = parsed
    return entries


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, config file, and flags; validate everything."""
    merged = dict(_DEFAULTS)
    explicit: set[str] = set()
    if args.config is not None:
        file_entries = read_config_file(Path(args.config))
        merged.update(file_entries)
        explicit.update(file_entries)

    flag_map = {
        "preset": args.preset,
        "ell": args.ell,
        "f_expr": args.f_expr,
        "x_min": args.x_min,
        "x_max": args.x_max,
        "n": args.n,
        "lambdas": (
            _parse_float_list(args.lambdas, "--lambda")
            if args.lambdas is not None
            else None
        ),
        "betas": (
            _parse_float_list(args.betas, "--beta")
            if args.betas is not None
            else None
        ),
        "levels": args.levels,
        "out": args.out,
        "s_values": (
            _parse_float_list(args.s_values, "--s-values")
            if getattr(args, "s_values", None) is not None
            else None
        ),
        "plots": (not args.no_plot) if args.no_plot else None,
    }
    for key, value in flag_map.items():
        if value is not None:
            merged[key] = value
            explicit.add(key)

    if merged["f_expr"] is not None and "preset" in explicit:
        raise ConfigError("give either --preset or --f-expr, not both")
    if merged["f_expr"] is not None:
        merged["preset"] = None
        try:
            parse_expression(str(merged["f_expr"]))
        except ExprError as exc:
            raise ConfigError(f"--f-expr: {exc}")
    elif merged["preset"] not in {"kink", "pt"}:
        raise ConfigError(f"unknown preset '{merged['preset']}'")

    try:
        ell = int(merged["ell"])
        n = int(merged["n"])
        levels = int(merged["levels"])
        x_min = float(merged["x_min"])
        x_max = float(merged["x_max"])
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc))
    if ell < 1:
        raise ConfigError("--ell must be a positive integer")
    if x_min >= x_max:
        raise ConfigError("grid requires xmin < xmax")
    if n < 3:
        raise ConfigError("grid requires at least 3 points")
    if not 1 <= levels < n - 2:
        raise ConfigError("--levels must satisfy 1 <= levels < n - 2")
    for lam in merged["lambdas"]:
        try:
            FamilyParameter(float(lam))
        except ValueError as exc:
            raise ConfigError(str(exc))
    betas = tuple(sorted(float(b) for b in merged["betas"]))
    if betas[0] <= 0:
        raise ConfigError("--beta values must be positive")

    return RunConfig(
        preset=merged["preset"],
        ell=ell,
        f_expr=merged["f_expr"],
        x_min=x_min,
        x_max=x_max,
        n=n,
        lambdas=tuple(float(v) for v in merged["lambdas"]),
        betas=betas,
        levels=levels,
        out=Path(str(merged["out"])),
        s_values=tuple(float(v) for v in merged["s_values"]),
        plots=bool(merged["plots"]),
    )


def build_superpotential(cfg: RunConfig) -> Superpotential:
    grid = cfg.grid()
    if cfg.f_expr is not None:
        try:
            return expression_superpotential(cfg.f_expr, grid)
        except ValueError as exc:
            if isinstance(exc, ExprError):
                raise
            raise ConfigError(str(exc))
    if cfg.preset == "kink":
        return pt_superpotential(grid, 2)
    return pt_superpotential(grid, cfg.ell)


def _bound_spectrum(
    v: np.ndarray, grid: Grid, k: int, edge: float
) -> tuple[Spectrum, np.ndarray]:
    from .numerics import SampledFunction

    spectrum = eigen_solve(SampledFunction(grid, v), k, continuum_edge=edge)
    return spectrum, spectrum.eigenvalues[bound_level_indices(spectrum)]


def _lambda_label(lam: float) -> str:
    return f"{lam:g}"


def cmd_partners(cfg: RunConfig) -> int:
    sp = build_superpotential(cfg)
    pair = partner_potentials(sp)
    x = sp.f.grid.points
    files = [
        write_csv(
            cfg.out / "partners.csv",
            ["x", "f", "v_minus", "v_plus"],
            zip(x, sp.f.values, pair.v_minus.values, pair.v_plus.values),
        )
    ]
    mode = zero_mode(sp)
    diagnostics: dict = {
        "asymptotes": {"f_minus": sp.f_minus, "f_plus": sp.f_plus},
        "continuum_edge": sp.continuum_edge,
    }
    if mode is not None:
        files.append(
            write_csv(
                cfg.out / "zero_mode.csv",
                ["x", "psi0"],
                zip(x, mode.psi.values),
            )
        )
        diagnostics["zero_mode"] = {
            "sector": mode.sector,
            "peak_value": float(np.abs(mode.psi.values).max()),
            "norm": l2_norm(mode.psi),
        }
    else:
        diagnostics["zero_mode"] = "no normalizable zero mode"
    if cfg.plots:
        files.append(
            plotting.save_partners_figure(cfg.out / "partners.png", pair, mode)
        )
    files.append(write_summary(cfg, "partners", files, diagnostics))
    return EXIT_OK


def _require_seed(sp: Superpotential):
    mode = zero_mode(sp)
    if mode is None or mode.sector != "minus":
        raise ConfigError(
            "this superpotential has no normalizable zero mode in the lowered "
            "sector, so there is no deformation family to build"
        )
    return mode


def cmd_family(cfg: RunConfig) -> int:
    sp = build_superpotential(cfg)
    mode = _require_seed(sp)
    pair = partner_potentials(sp)
    x = sp.f.grid.points
    files: list[Path] = []
    members: list[IsospectralMember] = []
    per_lambda: dict[str, dict] = {}
    for lam in cfg.lambdas:
        label = _lambda_label(lam)
        try:
            member = deformed_potential(sp, mode.psi, FamilyParameter(lam))
        except NumericalError as exc:
            per_lambda[label] = {"error": str(exc)}
            continue
        members.append(member)
        files.append(
            write_csv(
                cfg.out / f"family_{label}.csv",
                ["x", "F", "v_tilde", "psi0_tilde"],
                zip(
                    x,
                    member.superpotential.values,
                    member.potential.values,
                    member.zero_mode.values,
                ),
            )
        )
        _, bound = _bound_spectrum(
            member.potential.values, sp.f.grid, cfg.levels, sp.continuum_edge
        )
        per_lambda[label] = {
            "riccati_residual": riccati_residual(member.superpotential, pair.v_plus),
            "annihilation_residual": annihilation_check(
                member.superpotential, member.zero_mode
            ),
            "zero_mode_norm": l2_norm(member.zero_mode),
            "bound_spectrum": bound,
            "max_deviation_from_undeformed": float(
                np.abs(member.potential.values - pair.v_minus.values).max()
            ),
        }
    diagnostics = {"per_lambda": per_lambda}
    if cfg.plots and members:
        files.append(
            plotting.save_family_figure(
                cfg.out / "family.png", members, pair.v_minus
            )
        )
    files.append(write_summary(cfg, "family", files, diagnostics))
    if not members:
        print("every family member failed to construct", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def _component_rows(
    x: np.ndarray, spectrum: DiracSpectrum
) -> list[tuple[str, np.ndarray, np.ndarray]]:
    """Per nonnegative level: (name suffix, upper values, lower values)."""
    rows = []
    level = 0
    if spectrum.has_zero_mode:
        mode = spectrum.zero_mode.values
        zeros = np.zeros_like(mode)
        if spectrum.zero_mode_sector == "minus":
            rows.append((f"level{level}", zeros, mode))
        else:
            rows.append((f"level{level}", mode, zeros))
        level += 1
    for upper, lower in zip(spectrum.upper_components, spectrum.lower_components):
        rows.append((f"level{level}", upper.values, lower.values))
        level += 1
    return rows


def cmd_dirac(cfg: RunConfig) -> int:
    sp = build_superpotential(cfg)
    from .susy import dirac_spectrum

    base = dirac_spectrum(sp, cfg.levels)
    x = sp.f.grid.points
    files: list[Path] = []
    omega_rows: list[tuple[str, float]] = [
        ("undeformed", float(w)) for w in base.omegas
    ]
    figures: dict[str, DiracSpectrum] = {"undeformed": base}
    for suffix, upper, lower in _component_rows(x, base):
        files.append(
            write_csv(
                cfg.out / f"dirac_undeformed_{suffix}.csv",
                ["x", "upper", "lower"],
                zip(x, upper, lower),
            )
        )

    diagnostics: dict = {
        "continuum_edge": base.continuum_edge,
        "omegas": {"undeformed": base.omegas},
    }
    if base.has_zero_mode and base.zero_mode_sector == "minus":
        for lam in cfg.lambdas:
            label = _lambda_label(lam)
            member = deformed_potential(sp, base.zero_mode, FamilyParameter(lam))
            deformed = deformed_dirac_solutions(member, sp, cfg.levels)
            _, bound = _bound_spectrum(
                member.potential.values, sp.f.grid, cfg.levels, sp.continuum_edge
            )
            # omega list re-derived from the deformed potential's own
            # spectrum; the zero level carries O(h^2) error of either sign
            snap = 10.0 * sp.f.grid.h**2
            positives = [float(np.sqrt(e)) for e in bound if e > snap]
            omegas = [-w for w in reversed(positives)] + [0.0] + positives
            member_name = f"lambda={label}"
            omega_rows.extend((member_name, w) for w in omegas)
            diagnostics["omegas"][member_name] = omegas
            figures[member_name] = deformed
            for suffix, upper, lower in _component_rows(x, deformed):
                files.append(
                    write_csv(
                        cfg.out / f"dirac_lambda{label}_{suffix}.csv",
                        ["x", "upper", "lower"],
                        zip(x, upper, lower),
                    )
                )
    else:
        diagnostics["family"] = (
            "no lowered-sector zero mode, so only the undeformed levels exist"
        )
    files.insert(
        0,
        write_csv(cfg.out / "dirac.csv", ["member", "omega"], omega_rows),
    )
    if cfg.plots:
        files.append(plotting.save_dirac_figure(cfg.out / "dirac.png", figures))
    files.append(write_summary(cfg, "dirac", files, diagnostics))
    return EXIT_OK


def cmd_index(cfg: RunConfig) -> int:
    sp = build_superpotential(cfg)
    edge = sp.continuum_edge
    pair = partner_potentials(sp)
    e_minus = eigen_solve(pair.v_minus, cfg.levels).eigenvalues
    e_plus = eigen_solve(pair.v_plus, cfg.levels).eigenvalues

    rows = []
    numeric_points: dict[float, float] = {}
    analytic_values = []
    for beta in cfg.betas:
        analytic = index_analytic(sp.f_plus, sp.f_minus, beta)
        analytic_values.append(analytic)
        numeric = None
        if edge > 0 and np.exp(-beta * edge) < NUMERIC_INDEX_SUPPRESSION:
            numeric = float(
                np.exp(-beta * e_minus).sum() - np.exp(-beta * e_plus).sum()
            )
            numeric_points[beta] = numeric
        rows.append(
            (beta, analytic, numeric, index_ode_rhs(sp.f_plus, sp.f_minus, beta))
        )
    files = [
        write_csv(
            cfg.out / "index.csv",
            ["beta", "delta_analytic", "delta_numeric", "ode_rhs"],
            rows,
        )
    ]
    limit = index_limit(sp)
    diagnostics = {
        "index_limit": "indeterminate" if limit is None else limit,
        "analytic_at_largest_beta": analytic_values[-1],
        "numeric_points": {f"{b:g}": v for b, v in numeric_points.items()},
    }
    if cfg.plots:
        files.append(
            plotting.save_index_figure(
                cfg.out / "index.png", cfg.betas, analytic_values, numeric_points
            )
        )
    files.append(write_summary(cfg, "index", files, diagnostics))
    return EXIT_OK


def cmd_pt(cfg: RunConfig) -> int:
    ell = cfg.ell
    ladder = ladder_spectra(ell)
    grid = cfg.grid()
    sp = pt_superpotential(grid, ell)
    pair = partner_potentials(sp)
    k = max(cfg.levels, ell + 1)
    _, numeric_minus = _bound_spectrum(
        pair.v_minus.values, grid, k, ladder.continuum_edge
    )
    _, numeric_plus = _bound_spectrum(
        pair.v_plus.values, grid, k, ladder.continuum_edge
    )

    rows = []
    for sector, analytic, numeric in (
        ("minus", ladder.e_minus, numeric_minus),
        ("plus", ladder.e_plus, numeric_plus),
    ):
        for j, e_analytic in enumerate(analytic):
            e_numeric = float(numeric[j]) if j < numeric.size else None
            error = abs(e_numeric - e_analytic) if e_numeric is not None else None
            rows.append((sector, j, float(e_analytic), e_numeric, error))
    files = [
        write_csv(
            cfg.out / "pt.csv",
            ["sector", "level", "e_analytic", "e_numeric", "abs_error"],
            rows,
        )
    ]
    regime_rows = []
    for s in cfg.s_values:
        verdict = singularity_regime(s)
        regime_rows.append((s, verdict.regime.value, verdict.on_boundary))
    files.append(
        write_csv(
            cfg.out / "regimes.csv", ["s", "regime", "on_boundary"], regime_rows
        )
    )
    c_strength = -ell * (ell + 1) / 2.0
    unit_levels = whole_line_bound_levels(c_strength)
    diagnostics = {
        "continuum_edge": ladder.continuum_edge,
        "half_kinetic_strength_c": c_strength,
        "half_kinetic_levels": [
            {"energy": lvl.energy, "k": lvl.k, "parity": lvl.parity}
            for lvl in unit_levels
        ],
        "max_abs_error_minus": (
            float(np.abs(numeric_minus[: ladder.e_minus.size] - ladder.e_minus).max())
            if numeric_minus.size >= ladder.e_minus.size
            else "missing levels"
        ),
    }
    if cfg.plots:
        files.append(
            plotting.save_pt_figure(
                cfg.out / "pt.png",
                ell,
                ladder.e_minus,
                numeric_minus[: ladder.e_minus.size],
                ladder.e_plus,
                numeric_plus[: ladder.e_plus.size],
                ladder.continuum_edge,
            )
        )
    files.append(write_summary(cfg, "pt", files, diagnostics))
    return EXIT_OK


_COMMANDS = {
    "partners": cmd_partners,
    "family": cmd_family,
    "dirac": cmd_dirac,
    "index": cmd_index,
    "pt": cmd_pt,
}


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--preset",
        choices=["kink", "pt"],
        help="built-in superpotential: kink (2 tanh x) or pt (ell tanh x)",
    )
    shared.add_argument(
        "--ell", type=int, help="ladder index for the pt preset (default 2)"
    )
    shared.add_argument(
        "--f-expr",
        dest="f_expr",
        help="superpotential as an expression in x, e.g. '2*tanh(x)'",
    )
    shared.add_argument("--xmin", dest="x_min", type=float, help="left grid edge")
    shared.add_argument("--xmax", dest="x_max", type=float, help="right grid edge")
    shared.add_argument("--n", type=int, help="grid point count")
    shared.add_argument(
        "--lambda",
        dest="lambdas",
        help="comma-separated deformation parameters (lam < -1 or lam > 0)",
    )
    shared.add_argument(
        "--beta", dest="betas", help="comma-separated regulator values (beta > 0)"
    )
    shared.add_argument("--levels", type=int, help="eigenlevel count per solve")
    shared.add_argument("--out", help="output directory (default .)")
    shared.add_argument("--config", help="flat key = value config file")
    shared.add_argument(
        "--no-plot",
        action="store_const",
        const=True,
        help="skip figure rendering",
    )

    parser = argparse.ArgumentParser(
        prog="susydirac",
        description=(
            "Reduce the 1D Dirac problem with a scalar potential to its "
            "partner Schrodinger problems, build isospectral deformation "
            "families, and check the spectra against closed forms."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser(
        "partners",
        parents=[shared],
        help="partner potentials and the zero mode",
    )
    commands.add_parser(
        "family",
        parents=[shared],
        help="one-parameter isospectral deformation family",
    )
    commands.add_parser(
        "dirac",
        parents=[shared],
        help="Dirac levels and spinor components, deformed and not",
    )
    commands.add_parser(
        "index",
        parents=[shared],
        help="regularized spectral asymmetry over a beta sweep",
    )
    pt_cmd = commands.add_parser(
        "pt",
        parents=[shared],
        help="closed-form ladders vs the eigensolver, singularity regimes",
    )
    pt_cmd.add_argument(
        "--s-values",
        dest="s_values",
        help="comma-separated sinh^-2 strengths to classify",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "s_values"):
        args.s_values = None
    try:
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    cfg.out.mkdir(parents=True, exist_ok=True)
    try:
        return _COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, EvalDomainError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
