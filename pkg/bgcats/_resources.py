"""Bundled resource locations.

The YAML files under bgcats/config/ ship inside the wheel, so they resolve
relative to the package both when installed and when run from the source tree.
"""

from pathlib import Path


def get_package_root() -> Path:
    """Return the root of the installed bgcats package."""
    return Path(__file__).parent


def get_config_dir() -> Path:
    return get_package_root() / "config"


def get_defaults_path() -> Path:
    """Return the path of the bundled numerical defaults."""
    return get_config_dir() / "defaults.yaml"


def get_presets_path() -> Path:
    """Return the path of the bundled figure presets."""
    return get_config_dir() / "presets.yaml"
