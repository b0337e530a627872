import pytest

from bgcats.application.config_loader import ConfigLoader, ConfigValidationError
from bgcats.domain.value_objects import QuadratureSpec, SeriesControl


def test_bundled_defaults():
    loader = ConfigLoader()
    assert loader.series_control() == SeriesControl(rel_tol=1e-12, max_terms=500)
    assert loader.quadrature_spec() == QuadratureSpec(node_count=64, rel_tol=1e-12, max_refinements=12)
    assert loader.settings["seed"] == 42
    assert loader.settings["verification"]["tolerance"] == 1e-6


def test_file_values_merge_over_defaults(tmp_path):
    path = tmp_path / "bgcats.yaml"
    path.write_text("series:\n  max_terms: 50\nseed: 7\n", encoding="utf-8")
    loader = ConfigLoader(path)
    assert loader.series_control() == SeriesControl(rel_tol=1e-12, max_terms=50)
    assert loader.settings["seed"] == 7
    assert loader.settings["scan"]["workers"] == 4


def test_missing_file_falls_back_to_defaults(tmp_path):
    loader = ConfigLoader(tmp_path / "absent.yaml")
    assert loader.settings == ConfigLoader.DEFAULTS


def test_unparsable_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("series: [unclosed\n", encoding="utf-8")
    assert ConfigLoader(path).settings == ConfigLoader.DEFAULTS


@pytest.mark.parametrize(
    "text",
    [
        "series:\n  rel_tol: -1.0\n",
        "quadrature:\n  node_count: 0\n",
        "scan:\n  workers: 2.5\n",
        "seed: seven\n",
        "seed: -3\n",
        "verification:\n  tolerance: true\n",
        "- just\n- a list\n",
    ],
)
def test_invalid_values_are_rejected(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigValidationError):
        ConfigLoader(path)
