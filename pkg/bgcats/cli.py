"""bgcats CLI.

Commands:
  scan-variance  Tabulate (Delta^2 p, Delta^2 q) or (Delta^2 X, Delta^2 Y) over a parameter scan
  photon-dist    Photon-number distribution of one state, or p_0..p_nmax over a scan
  verify         Run the numerical verification suites
  presets        List the figure presets
  version        Show bgcats version

Records go to stdout (or --out); structured logs, when enabled with --log,
go to stderr. Exit codes: 0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import dataclasses
import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any, TextIO

import typer
from rich.console import Console
from rich.table import Table

from bgcats import __version__
from bgcats.adapters.config import EnvironmentConfigAdapter
from bgcats.adapters.logging import SilentLogger, StructuredLogger
from bgcats.adapters.output import writer_for
from bgcats.application.config_loader import ConfigLoader, ConfigValidationError
from bgcats.application.parameters import (
    PointParams,
    ScanSpec,
    parse_alpha,
    parse_angles,
    parse_fixed,
)
from bgcats.application.photon_service import PhotonService
from bgcats.application.presets import Preset, PresetError, get_preset, load_presets
from bgcats.application.scan_service import WINDOW_MATCH_TOL, ScanService
from bgcats.application.verification_service import SUITE_ALIASES, SUITES, VerificationService
from bgcats.domain.errors import BgcatsError
from bgcats.domain.quantum_stats import DistributionScope
from bgcats.ports.logging_port import LoggingPort

app = typer.Typer(
    name="bgcats",
    help="Barut-Girardello coherent states, cat states and their squeezing and photon statistics.",
    add_completion=False,
)
console = Console()
status_console = Console(stderr=True)
err_console = Console(stderr=True, style="bold red")

USAGE_ERRORS = (ValueError, BgcatsError, ConfigValidationError)
EXIT_FAILED = 1
EXIT_USAGE = 2


@contextmanager
def _usage_errors() -> Iterator[None]:
    """Report invalid input on stderr and exit 2."""
    try:
        yield
    except USAGE_ERRORS as exc:
        err_console.print(f"Error: {exc}")
        raise typer.Exit(code=EXIT_USAGE) from exc


@contextmanager
def _open_output(out: Path | None) -> Iterator[TextIO]:
    if out is None:
        yield sys.stdout
        return
    with out.open("w", encoding="utf-8", newline="") as handle:
        yield handle


def _logger(log: bool) -> LoggingPort:
    return StructuredLogger(sys.stderr) if log else SilentLogger()


def _config(config: Path | None, seed: int | None = None, tol: float | None = None) -> EnvironmentConfigAdapter:
    return EnvironmentConfigAdapter(ConfigLoader(config), seed=seed, tolerance=tol)


def _point(
    base: PointParams | None,
    *,
    family: str | None,
    r_tilde: float | None,
    r_i: float | None,
    theta: float | None,
    phi: float | None,
    psi: float | None,
    alpha: str | None,
    angles: str | None,
    mode: int | None,
    modes: int | None,
) -> PointParams:
    """Preset bindings (or defaults) overridden by the flags that were given."""
    overrides: dict[str, Any] = {
        "family": family,
        "r_tilde": r_tilde,
        "r_i": r_i,
        "theta": theta,
        "phi": phi,
        "psi": psi,
        "mode": mode,
        "modes": modes,
        "alpha": parse_alpha(alpha) if alpha is not None else None,
        "angles": parse_angles(angles) if angles is not None else None,
    }
    given = {key: value for key, value in overrides.items() if value is not None}
    return dataclasses.replace(base or PointParams(), **given)


def _resolve_preset(name: str | None, command: str, presets_file: Path | None) -> Preset | None:
    if name is None:
        return None
    preset = get_preset(name, presets_file)
    if preset.command != command:
        raise PresetError(f"Preset {name!r} belongs to '{preset.command}', not '{command}'")
    return preset


def _emit(rows: Sequence[dict[str, Any]], meta: dict[str, Any], fmt: str, out: Path | None) -> None:
    writer = writer_for(fmt)
    with _open_output(out) as stream:
        writer.write(rows, meta, stream)


def _scan_meta(scan: ScanSpec) -> dict[str, Any]:
    return {
        "variable": scan.variable,
        "start": scan.start,
        "stop": scan.stop,
        "steps": scan.steps,
        "fixed": dict(scan.fixed),
    }


# Shared options
PRESET = typer.Option(None, "--preset", help="Figure preset name (see `bgcats presets`)")
PRESETS_FILE = typer.Option(None, "--presets-file", help="YAML file of presets (default: bundled)")
FAMILY = typer.Option(None, "--family", help="coherent, phi-family, n-angle, cat-phi or cat-phi-psi")
R_TILDE = typer.Option(None, "--r-tilde", help="Total amplitude |alpha|")
R_I = typer.Option(None, "--r-i", help="Amplitude of the observed mode (default: r-tilde)")
THETA = typer.Option(None, "--theta", help="Phase of the observed mode, radians")
PHI = typer.Option(None, "--phi", help="Angle phi (varphi for the phi-family), radians")
PSI = typer.Option(None, "--psi", help="Angle psi, radians")
ALPHA = typer.Option(None, "--alpha", help='Explicit amplitudes "re,im;re,im;..."')
ANGLES = typer.Option(None, "--angles", help='n-angle family angles "a,b,c", radians')
MODE = typer.Option(None, "--mode", help="Observed mode (1-based) when --alpha is given")
MODES = typer.Option(None, "--modes", help="Number of modes sharing r-tilde (0: as needed)")
FORMAT = typer.Option("csv", "--format", help="csv or json")
OUT = typer.Option(None, "--out", help="Write records to this file instead of stdout")
LOG = typer.Option(False, "--log", help="Structured JSON logs on stderr")
CONFIG = typer.Option(None, "--config", help="YAML settings file (default: bundled defaults.yaml)")


@app.command("scan-variance")
def scan_variance(
    preset: str | None = PRESET,
    presets_file: Path | None = PRESETS_FILE,
    scan: str | None = typer.Option(None, "--scan", help="var:start:stop:steps"),
    which: str | None = typer.Option(None, "--which", help="pq or XY"),
    nmax: int = typer.Option(0, "--nmax", help="Also measure on the truncated Fock oracle with this cutoff (0: closed form only)"),
    tol: float | None = typer.Option(None, "--tol", help="Endpoint tolerance when matching joint squeezing windows"),
    seed: int | None = typer.Option(None, "--seed", help="Recorded in meta; scans draw no random numbers"),
    family: str | None = FAMILY,
    r_tilde: float | None = R_TILDE,
    r_i: float | None = R_I,
    theta: float | None = THETA,
    phi: float | None = PHI,
    psi: float | None = PSI,
    alpha: str | None = ALPHA,
    angles: str | None = ANGLES,
    mode: int | None = MODE,
    modes: int | None = MODES,
    fmt: str = FORMAT,
    out: Path | None = OUT,
    log: bool = LOG,
    config: Path | None = CONFIG,
) -> None:
    """Quadrature variances along a one-parameter scan.

    Example (curve f2 of the first figure):
        bgcats scan-variance --preset fig1-f2
    """
    with _usage_errors():
        chosen = _resolve_preset(preset, "scan-variance", presets_file)
        point = _point(
            chosen.params if chosen else None,
            family=family, r_tilde=r_tilde, r_i=r_i, theta=theta, phi=phi, psi=psi,
            alpha=alpha, angles=angles, mode=mode, modes=modes,
        )
        spec = ScanSpec.parse(scan) if scan else (chosen.scan if chosen else None)
        if spec is None:
            raise ValueError("A scan is required: pass --scan var:start:stop:steps or --preset")
        which = which or (chosen.which if chosen else "pq")
        curve = chosen.curve if chosen and which == chosen.which else None
        factor = chosen.factor if curve else 1.0
        if nmax < 0:
            raise ValueError(f"--nmax must be >= 0, got {nmax}")
        if tol is not None and tol <= 0:
            raise ValueError(f"--tol must be positive, got {tol}")
        window_tol = WINDOW_MATCH_TOL if tol is None else tol

        logger = _logger(log)
        settings = _config(config, seed=seed)
        service = ScanService(logger, settings.get_worker_count())
        rows = service.scan_variance(point, spec, which, curve, factor, nmax or None)
        meta: dict[str, Any] = {
            "command": "scan-variance",
            "version": __version__,
            "preset": preset,
            "which": which,
            "bindings": point.bindings(),
            "scan": _scan_meta(spec),
            "seed": settings.get_seed(),
        }
        if nmax:
            meta["oracle_cutoff"] = nmax
        if curve:
            meta["curve"] = {"column": curve, "factor": factor}
        windows = service.joint_windows(point, spec, window_tol)
        if windows is not None:
            meta["joint_squeezing_windows"] = windows
            meta["window_tol"] = window_tol
        _emit(rows, meta, fmt, out)


@app.command("photon-dist")
def photon_dist(
    preset: str | None = PRESET,
    presets_file: Path | None = PRESETS_FILE,
    scan: str | None = typer.Option(None, "--scan", help="var:start:stop:steps (p_0..p_nmax per point)"),
    scope: str = typer.Option("total", "--scope", help="total, per-mode or mode-conditional"),
    fixed: str | None = typer.Option(None, "--fixed", help='Conditioning occupations "mode=count,..."'),
    nmax: int = typer.Option(0, "--nmax", help="Largest photon number (0: adaptive)"),
    photon_number: int | None = typer.Option(None, "--photon-number", help="Copy p_n into a curve column"),
    family: str | None = FAMILY,
    r_tilde: float | None = R_TILDE,
    r_i: float | None = R_I,
    theta: float | None = THETA,
    phi: float | None = PHI,
    psi: float | None = PSI,
    alpha: str | None = ALPHA,
    angles: str | None = ANGLES,
    mode: int | None = MODE,
    modes: int | None = MODES,
    fmt: str = FORMAT,
    out: Path | None = OUT,
    log: bool = LOG,
    config: Path | None = CONFIG,
) -> None:
    """Photon-number distribution with Q, l_n and squeezing summary.

    Example (first curve of the fifth figure):
        bgcats photon-dist --preset fig5-pn1 --format json
    """
    with _usage_errors():
        chosen = _resolve_preset(preset, "photon-dist", presets_file)
        point = _point(
            chosen.params if chosen else None,
            family=family, r_tilde=r_tilde, r_i=r_i, theta=theta, phi=phi, psi=psi,
            alpha=alpha, angles=angles, mode=mode, modes=modes,
        )
        if nmax < 0:
            raise ValueError(f"--nmax must be >= 0, got {nmax}")
        n_max = nmax or None
        spec = ScanSpec.parse(scan) if scan else (chosen.scan if chosen else None)
        logger = _logger(log)
        settings = _config(config)
        service = PhotonService(
            logger, settings.get_worker_count(), settings.get_truncation_tol()
        )
        meta: dict[str, Any] = {
            "command": "photon-dist",
            "version": __version__,
            "preset": preset,
            "bindings": point.bindings(),
        }

        if spec is not None:
            if photon_number is None and chosen is not None:
                photon_number = chosen.photon_number
            rows = service.scan(point, spec, n_max, photon_number)
            meta["scan"] = _scan_meta(spec)
            if photon_number is not None:
                meta["curve"] = {"column": f"p_{photon_number}"}
            _emit(rows, meta, fmt, out)
            return

        distribution_scope = DistributionScope(scope)
        rows, summary = service.distribution(
            point, n_max, distribution_scope, parse_fixed(fixed) if fixed else None
        )
        summary_fields = summary.to_dict()
        meta["scope"] = distribution_scope.value
        meta["summary"] = summary_fields
        # summary values repeat on every row so CSV carries them too
        rows = [{**row, **summary_fields} for row in rows]
        _emit(rows, meta, fmt, out)


@app.command()
def verify(
    suite: str = typer.Option("all", "--suite", help=f"{', '.join(SUITES)} or all"),
    tol: float | None = typer.Option(None, "--tol", help="Pass threshold for the resolution-of-unity checks"),
    seed: int | None = typer.Option(None, "--seed", help="Seed for random amplitudes and angles"),
    fmt: str = FORMAT,
    out: Path | None = OUT,
    log: bool = LOG,
    config: Path | None = CONFIG,
) -> None:
    """Run verification suites; exit 0 only if every check passes."""
    with _usage_errors():
        suite = SUITE_ALIASES.get(suite, suite)
        if suite != "all" and suite not in SUITES:
            raise ValueError(f"Unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all")
        if tol is not None and tol <= 0:
            raise ValueError(f"--tol must be positive, got {tol}")
        settings = _config(config, seed=seed, tol=tol)
        service = VerificationService(settings, _logger(log))
        results = service.run(suite)
        rows = [result.to_dict() for result in results]
        meta = {
            "command": "verify",
            "version": __version__,
            "suite": suite,
            "seed": settings.get_seed(),
            "tolerance": settings.get_tolerance(),
        }
        _emit(rows, meta, fmt, out)

    failed = [result for result in results if not result.passed]
    if failed:
        for result in failed:
            err_console.print(
                f"FAILED {result.suite}/{result.name}: {result.value:.3e} >= {result.threshold:.1e}"
                + (f" ({result.detail})" if result.detail else "")
            )
        raise typer.Exit(code=EXIT_FAILED)
    status_console.print(f"[green]{len(results)} checks passed[/green]")


@app.command()
def presets(
    presets_file: Path | None = PRESETS_FILE,
) -> None:
    """List the figure presets and their parameter bindings."""
    with _usage_errors():
        available = load_presets(presets_file)
    table = Table(title="bgcats presets")
    table.add_column("Name", style="bold")
    table.add_column("Command")
    table.add_column("Scan")
    table.add_column("Description")
    for name, preset in available.items():
        scan = (
            f"{preset.scan.variable} {preset.scan.start:g}..{preset.scan.stop:g}"
            if preset.scan
            else ""
        )
        table.add_row(name, preset.command, scan, preset.description)
    console.print(table)


@app.command()
def version() -> None:
    """Show bgcats version."""
    console.print(f"bgcats {__version__}")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
