"""Batch command-line front end.

Commands: modes, spectrum, fieldmap, decay, transfer, coupling-sweep.
Configuration comes from an optional key=value file plus per-key flag
overrides (flags win). Every run writes CSV data files with a '#'-prefixed
metadata header (including a hash of the resolved configuration) and a
JSON manifest; reruns with the same configuration are byte-identical.

Exit codes: 0 ok, 2 configuration error, 3 numerical/domain error.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .constants import (CONSTANTS, ConfigError, DomainError, GHz_to_rad_per_s,
                        M3_TO_MM3, NM, NumericalError, TWO_PI, US,
                        tesla_to_field)
from .dynamics import (EmitterConfig, build_kernel, evolve_pseudomode,
                       evolve_volterra, max_stable_dt)
from .material import MaterialParams, internal_field, state_from_internal
from .modes import (CavityConfig, coupling_strength, kittel_frequency,
                    magnon_modes, quantize_mode)
from .network import (coupling_vs_separation_sweep, effective_coupling,
                      symmetric_pair, transfer_dynamics)
from .spectral import auto_omega_grid, field_sweep_map, spectral_grid

EXPERIMENTS = ("modes", "spectrum", "fieldmap", "decay", "transfer", "coupling-sweep")


@dataclass
class RunConfig:
    """Resolved run configuration; every physical key uses the unit in its name."""

    experiment: str = ""
    # Geometry and material.
    R_nm: float = 30.0
    mu0_H0_T: float | None = 0.5
    mu0_He_T: float | None = None
    mu0_Ms_T: float = 0.178
    gamma_GHz_per_T: float = 28.0
    Gamma_rad_per_s: float = 1e7
    alpha: float | None = None
    n_max: int = 7
    mu_B_scale: float = 1.0
    # Emitter placement and tuning.
    a_nm: float | None = None
    a_over_R: float = 1.2
    omega0_GHz: float | None = None     # None: tuned to the Kittel mode
    # Dispersive network.
    Delta_over_g: float = 10.0
    G_nm: float = 6.0
    # Time grid.
    t_end_us: float = 1.0
    dt_ns: float | None = None
    n_samples: int = 100000
    solver: str = "pseudomode"          # pseudomode | volterra
    # Frequency grid (spectrum).
    omega_min_GHz: float | None = None
    omega_max_GHz: float | None = None
    n_omega: int | None = None
    # Field sweep (fieldmap).
    mu0_H0_min_T: float = 0.3
    mu0_H0_max_T: float = 0.7
    n_H0: int = 41
    # Radius sweeps.
    R_list_nm: str = "30,50,70,100"
    R_min_nm: float = 20.0
    R_max_nm: float = 100.0
    n_R: int = 17
    # Output.
    out: str = "out"
    format: str = "csv"                 # csv | json (json adds JSON data dumps)
    jobs: int = 1


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(RunConfig)}


def _parse_value(key: str, raw: str):
    ftype = _FIELD_TYPES[key]
    raw = raw.strip()
    if ftype in ("int", "int | None"):
        if raw.lower() == "none" and "None" in ftype:
            return None
        return int(raw)
    if ftype in ("float", "float | None"):
        if raw.lower() == "none" and "None" in ftype:
            return None
        return float(raw)
    return raw


def parse_config(text: str | None, overrides: dict[str, str] | None = None) -> RunConfig:
    """Strict key=value parsing; unknown keys are rejected, flags override the file."""
    cfg = RunConfig()
    if text:
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
            key, raw = (part.strip() for part in stripped.split("=", 1))
            if key not in _FIELD_TYPES:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
            try:
                setattr(cfg, key, _parse_value(key, raw))
            except ValueError as exc:
                raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from exc
    for key, raw in (overrides or {}).items():
        if key not in _FIELD_TYPES:
            raise ConfigError(f"unknown key {key!r}")
        try:
            setattr(cfg, key, _parse_value(key, raw))
        except ValueError as exc:
            raise ConfigError(f"bad value for {key!r}: {exc}") from exc
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.experiment and cfg.experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {cfg.experiment!r}; choose from {EXPERIMENTS}")
    for key in ("R_nm", "mu0_Ms_T", "gamma_GHz_per_T", "t_end_us", "mu_B_scale"):
        if getattr(cfg, key) <= 0:
            raise ConfigError(f"{key} must be positive")
    if cfg.Gamma_rad_per_s < 0:
        raise ConfigError("Gamma_rad_per_s must be non-negative")
    if cfg.n_max < 1:
        raise ConfigError("n_max must be >= 1")
    if cfg.mu0_H0_T is None and cfg.mu0_He_T is None:
        raise ConfigError("one of mu0_H0_T or mu0_He_T is required")
    if cfg.solver not in ("pseudomode", "volterra"):
        raise ConfigError(f"unknown solver {cfg.solver!r}")
    if cfg.format not in ("csv", "json"):
        raise ConfigError(f"unknown format {cfg.format!r}")


# ---------------------------------------------------------------------------
# Building physics objects from a RunConfig.

def build_material(cfg: RunConfig) -> MaterialParams:
    return MaterialParams(
        Ms=tesla_to_field(cfg.mu0_Ms_T),
        gamma=TWO_PI * cfg.gamma_GHz_per_T * 1e9,
        Gamma=cfg.Gamma_rad_per_s,
        alpha=cfg.alpha,
    )


def build_cavity(cfg: RunConfig, R: float | None = None, n_max: int | None = None) -> CavityConfig:
    mat = build_material(cfg)
    if cfg.mu0_H0_T is not None:
        fields = state_from_internal(tesla_to_field(cfg.mu0_H0_T), mat)
    else:
        fields = internal_field(tesla_to_field(cfg.mu0_He_T), mat)
    return CavityConfig(R=R if R is not None else cfg.R_nm * NM, mat=mat,
                        fields=fields, n_max=n_max if n_max is not None else cfg.n_max)


def emitter_radius(cfg: RunConfig, cavity: CavityConfig) -> float:
    return cfg.a_nm * NM if cfg.a_nm is not None else cfg.a_over_R * cavity.R


def build_emitter(cfg: RunConfig, cavity: CavityConfig) -> EmitterConfig:
    omega0 = (GHz_to_rad_per_s(cfg.omega0_GHz) if cfg.omega0_GHz is not None
              else kittel_frequency(cavity.fields, cavity.mat))
    return EmitterConfig(position=(emitter_radius(cfg, cavity), 0.0, 0.0),
                         omega0=omega0, dipole_scale=cfg.mu_B_scale)


# ---------------------------------------------------------------------------
# Output plumbing.

def _config_hash(cfg: RunConfig) -> str:
    # Hash only the keys that influence the computed numbers; output plumbing
    # (directory, parallelism) must not change the data bytes.
    payload = {k: v for k, v in dataclasses.asdict(cfg).items()
               if k not in ("out", "jobs")}
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _write_csv(path: Path, header: list[str], rows, manifest_hash: str, meta: dict) -> None:
    lines = [f"# manifest_hash={manifest_hash}"]
    for key, val in meta.items():
        lines.append(f"# {key}={val}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".12g")


def _derived_quantities(cfg: RunConfig) -> dict:
    cavity = build_cavity(cfg)
    emitter = build_emitter(cfg, cavity)
    mode = quantize_mode(1, cavity)
    g = coupling_strength(mode, emitter)
    return {
        "omega_K_over_2pi_GHz": mode.omega / TWO_PI / 1e9,
        "Veff_mm3": mode.Veff * M3_TO_MM3,
        "Hzp_A_per_m": mode.Hzp,
        "g_over_2pi_MHz": g / TWO_PI / 1e6,
        "g_eff_over_2pi_kHz": effective_coupling(g, cfg.Delta_over_g * g) / TWO_PI / 1e3,
    }


# ---------------------------------------------------------------------------
# Experiment dispatch.

def run(cfg: RunConfig) -> int:
    """Execute one experiment; writes data + manifest, returns the exit status."""
    outdir = Path(cfg.out)
    start = time.monotonic()
    try:
        if not cfg.experiment:
            raise ConfigError("no experiment selected")
        outdir.mkdir(parents=True, exist_ok=True)
        mhash = _config_hash(cfg)
        derived = _derived_quantities(cfg)
        runner = {
            "modes": _run_modes,
            "spectrum": _run_spectrum,
            "fieldmap": _run_fieldmap,
            "decay": _run_decay,
            "transfer": _run_transfer,
            "coupling-sweep": _run_coupling_sweep,
        }[cfg.experiment]
        files = runner(cfg, outdir, mhash)
    except (ConfigError,) as exc:
        _write_error(outdir, "configuration", exc)
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, NumericalError) as exc:
        _write_error(outdir, cfg.experiment or "setup", exc)
        print(f"error in {cfg.experiment}: {exc}", file=sys.stderr)
        return 3

    manifest = {
        "config": dataclasses.asdict(cfg),
        "config_hash": mhash,
        "version": __version__,
        "derived": derived,
        "files": files,
        "duration_s": round(time.monotonic() - start, 6),
    }
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")

    print(f"omega_K/(2pi) = {derived['omega_K_over_2pi_GHz']:.4f} GHz")
    print(f"V_eff = {derived['Veff_mm3']:.4e} mm^3")
    print(f"g/(2pi) = {derived['g_over_2pi_MHz']:.4f} MHz")
    for name in files:
        print(f"wrote {outdir / name}")
    return 0


def _write_error(outdir: Path, stage: str, exc: Exception) -> None:
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "error.json").write_text(
            json.dumps({"stage": stage, "error": str(exc)}, indent=2) + "\n")
    except OSError:
        pass


def _run_modes(cfg: RunConfig, outdir: Path, mhash: str) -> list[str]:
    cavity = build_cavity(cfg)
    emitter = build_emitter(cfg, cavity)
    rows = []
    for mode in magnon_modes(cavity):
        rows.append((
            mode.n,
            mode.omega / TWO_PI / 1e9,
            mode.Gamma,
            mode.Veff * M3_TO_MM3,
            mode.Hzp,
            coupling_strength(mode, emitter) / TWO_PI / 1e6,
        ))
    _write_csv(outdir / "modes.csv",
               ["n", "omega_over_2pi_GHz", "Gamma_rad_per_s", "Veff_mm3",
                "Hzp_A_per_m", "g_over_2pi_MHz"],
               rows, mhash, {"R_nm": cfg.R_nm})
    return ["modes.csv"]


def _omega_grid(cfg: RunConfig, cavity: CavityConfig) -> np.ndarray:
    if cfg.omega_min_GHz is not None and cfg.omega_max_GHz is not None:
        npts = cfg.n_omega or 2001
        return np.linspace(GHz_to_rad_per_s(cfg.omega_min_GHz),
                           GHz_to_rad_per_s(cfg.omega_max_GHz), npts)
    return auto_omega_grid(cavity)


def _run_spectrum(cfg: RunConfig, outdir: Path, mhash: str) -> list[str]:
    cavity = build_cavity(cfg)
    emitter = build_emitter(cfg, cavity)
    grid = spectral_grid(_omega_grid(cfg, cavity), emitter, cavity)
    rows = zip(grid.omegas / TWO_PI / 1e9, grid.values)
    _write_csv(outdir / "spectrum.csv", ["omega_over_2pi_GHz", "J_rad_per_s"],
               rows, mhash, grid.metadata)
    files = ["spectrum.csv"]
    if cfg.format == "json":
        payload = {"metadata": grid.metadata,
                   "omega_over_2pi_GHz": list(grid.omegas / TWO_PI / 1e9),
                   "J_rad_per_s": list(grid.values)}
        (outdir / "spectrum.json").write_text(json.dumps(payload, indent=2) + "\n")
        files.append("spectrum.json")
    return files


def _run_fieldmap(cfg: RunConfig, outdir: Path, mhash: str) -> list[str]:
    cavity = build_cavity(cfg)
    emitter = build_emitter(cfg, cavity)
    mat = cavity.mat
    H0_values = np.linspace(tesla_to_field(cfg.mu0_H0_min_T),
                            tesla_to_field(cfg.mu0_H0_max_T), cfg.n_H0)
    # A common absolute grid wide enough for every column's peaks.
    lo_cav = CavityConfig(R=cavity.R, mat=mat,
                          fields=state_from_internal(H0_values[0], mat), n_max=cfg.n_max)
    hi_cav = CavityConfig(R=cavity.R, mat=mat,
                          fields=state_from_internal(H0_values[-1], mat), n_max=cfg.n_max)
    omegas = np.linspace(auto_omega_grid(lo_cav)[0], auto_omega_grid(hi_cav)[-1],
                         cfg.n_omega or 2001)
    sweep = field_sweep_map(H0_values, omegas, emitter, cavity, jobs=cfg.jobs or None)
    rows = []
    for i, H0 in enumerate(sweep.H0_values):
        for j, om in enumerate(sweep.omega_values):
            rows.append((H0 * CONSTANTS.mu0, om / TWO_PI / 1e9, sweep.J[i, j]))
    _write_csv(outdir / "fieldmap.csv", ["H0_T", "omega_GHz", "J"],
               rows, mhash, sweep.metadata)
    return ["fieldmap.csv"]


def _time_step(cfg: RunConfig, kernel) -> float:
    if cfg.dt_ns is not None:
        return cfg.dt_ns * 1e-9
    guard = max_stable_dt(kernel)
    return min(guard / 2.0, cfg.t_end_us * US / max(cfg.n_samples, 1))


def _run_decay(cfg: RunConfig, outdir: Path, mhash: str) -> list[str]:
    mat = build_material(cfg)
    files = []
    R_values = [float(tok) * NM for tok in str(cfg.R_list_nm).split(",") if tok.strip()]
    for R in R_values:
        cavity = build_cavity(cfg, R=R)
        emitter = build_emitter(cfg, cavity)
        kernel = build_kernel(emitter, cavity)
        dt = _time_step(cfg, kernel)
        solver = evolve_volterra if cfg.solver == "volterra" else evolve_pseudomode
        ts = solver(kernel, cfg.t_end_us * US, dt)
        name = f"decay_R{R / NM:g}nm.csv"
        _write_csv(outdir / name, ["t_us", "population"],
                   zip(ts.times / US, ts.populations), mhash,
                   {"R_nm": R / NM, "solver": cfg.solver})
        files.append(name)
    return files


def _run_transfer(cfg: RunConfig, outdir: Path, mhash: str) -> list[str]:
    cavity = build_cavity(cfg, n_max=1)
    a = emitter_radius(cfg, cavity)
    pair = symmetric_pair(cavity, a, Delta_over_g=cfg.Delta_over_g,
                          dipole_scale=cfg.mu_B_scale)
    kernel = build_kernel(pair.emitter1, cavity)
    dt = _time_step(cfg, kernel)
    result = transfer_dynamics(pair, cfg.t_end_us * US, dt)
    rows = zip(result.times / US, result.P1, result.P2, result.Pb)
    _write_csv(outdir / "transfer.csv", ["t_us", "P1", "P2", "Pb"], rows, mhash,
               {"g_rad_per_s": result.metadata["g"],
                "Delta_rad_per_s": result.metadata["Delta"],
                "swap_frequency_rad_per_s": result.swap_frequency,
                "fidelity": result.fidelity})
    return ["transfer.csv"]


def _run_coupling_sweep(cfg: RunConfig, outdir: Path, mhash: str) -> list[str]:
    mat = build_material(cfg)
    cavity = build_cavity(cfg)
    R_values = np.linspace(cfg.R_min_nm * NM, cfg.R_max_nm * NM, cfg.n_R)
    rows = coupling_vs_separation_sweep(cfg.G_nm * NM, R_values, mat,
                                        cavity.fields.H0,
                                        Delta_over_g=cfg.Delta_over_g,
                                        dipole_scale=cfg.mu_B_scale)
    data = [(r["separation_m"] / NM,
             r["g_eff_rad_per_s"] / TWO_PI,
             r["g_dip_rad_per_s"] / TWO_PI) for r in rows]
    _write_csv(outdir / "coupling_sweep.csv",
               ["separation_nm", "g_eff_Hz", "g_dip_Hz"], data, mhash,
               {"G_nm": cfg.G_nm, "Delta_over_g": cfg.Delta_over_g})
    return ["coupling_sweep.csv"]


# ---------------------------------------------------------------------------
# Argument parsing.

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magnoncavity",
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="experiment", required=True)
    for name in EXPERIMENTS:
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, default=None,
                       help="key=value configuration file")
        for fname in _FIELD_TYPES:
            if fname == "experiment":
                continue
            p.add_argument(f"--{fname}", type=str, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = args.config.read_text() if args.config else None
    except OSError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    overrides = {k: v for k, v in vars(args).items()
                 if k not in ("config", "experiment") and v is not None}
    try:
        cfg = parse_config(text, overrides)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    cfg.experiment = args.experiment
    try:
        _validate(cfg)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
