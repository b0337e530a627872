"""Bundled YAML configuration (defaults.yaml, presets.yaml)."""
