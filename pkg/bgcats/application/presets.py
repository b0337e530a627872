"""
Figure presets.

Each preset pins the parameter bindings of one plotted curve so that the
figure data can be regenerated by name (fig1-f1 ... fig5-pn4).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from bgcats._resources import get_presets_path
from bgcats.application.parameters import PointParams, ScanSpec

COMMANDS = ("scan-variance", "photon-dist")


class PresetError(ValueError):
    """Raised for unknown preset names or malformed preset entries."""

    pass


@dataclass(frozen=True)
class Preset:
    name: str
    command: str
    description: str
    params: PointParams
    scan: ScanSpec | None = None
    which: str = "pq"
    curve: str | None = None
    factor: float = 1.0
    photon_number: int | None = None


def _build(name: str, entry: dict[str, Any]) -> Preset:
    command = entry.get("command")
    if command not in COMMANDS:
        raise PresetError(f"Preset {name!r} has unknown command {command!r}")
    try:
        params = PointParams(**entry.get("params", {}))
        scan_entry = entry.get("scan")
        scan = ScanSpec(**scan_entry) if scan_entry else None
    except (TypeError, ValueError) as exc:
        raise PresetError(f"Preset {name!r} is malformed: {exc}") from exc
    photon_number = entry.get("photon_number")
    return Preset(
        name=name,
        command=command,
        description=str(entry.get("description", "")),
        params=params,
        scan=scan,
        which=str(entry.get("which", "pq")),
        curve=entry.get("curve"),
        factor=float(entry.get("factor", 1.0)),
        photon_number=int(photon_number) if photon_number is not None else None,
    )


def load_presets(path: str | Path | None = None) -> dict[str, Preset]:
    """All presets of a YAML file (default: the bundled presets.yaml), in file order."""
    source = Path(path) if path else get_presets_path()
    data = yaml.safe_load(source.read_text(encoding="utf-8")) or {}
    if not isinstance(data, dict):
        raise PresetError(f"{source} must hold a mapping of presets")
    return {name: _build(name, entry) for name, entry in data.items()}


def get_preset(name: str, path: str | Path | None = None) -> Preset:
    presets = load_presets(path)
    if name not in presets:
        known = ", ".join(presets)
        raise PresetError(f"Unknown preset {name!r}; known presets: {known}")
    return presets[name]
