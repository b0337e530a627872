import math

import numpy as np
import pytest

from bgcats.application.parameters import (
    PointParams,
    ScanSpec,
    parse_alpha,
    parse_angles,
    parse_fixed,
)
from bgcats.domain.value_objects import StateFamily


def test_scan_parse():
    scan = ScanSpec.parse("psi:0:6.5:14")
    assert (scan.variable, scan.start, scan.stop, scan.steps) == ("psi", 0.0, 6.5, 14)
    np.testing.assert_allclose(scan.points(), np.linspace(0.0, 6.5, 14))


@pytest.mark.parametrize(
    "text", ["psi:0:1", "nope:0:1:10", "psi:1:0:10", "psi:0:1:1", "psi:a:1:10", "psi:0:1:2.5"]
)
def test_scan_parse_rejects(text):
    with pytest.raises(ValueError):
        ScanSpec.parse(text)


def test_single_mode_point():
    params = PointParams(r_tilde=0.8, phi=0.3, psi=1.0).to_cat_params()
    assert params.alpha == (0.8 + 0j,)
    assert params.family is StateFamily.CAT_PHI_PSI
    assert (params.phi, params.psi) == (0.3, 1.0)


def test_excess_amplitude_goes_to_second_mode():
    params = PointParams(r_tilde=1.0, r_i=0.6, theta=math.pi / 2).to_cat_params()
    assert params.mode_count == 2
    assert params.alpha[0] == pytest.approx(0.6j)
    assert params.alpha[1] == pytest.approx(0.8)
    assert params.r_tilde == pytest.approx(1.0)


def test_excess_amplitude_spread_over_modes():
    params = PointParams(r_tilde=1.0, r_i=0.6, modes=3).to_cat_params()
    assert params.mode_count == 3
    assert params.alpha[1] == pytest.approx(params.alpha[2])
    assert params.r_tilde == pytest.approx(1.0)


def test_one_mode_cannot_hold_excess():
    with pytest.raises(ValueError):
        PointParams(r_tilde=1.0, r_i=0.6, modes=1).to_cat_params()


def test_r_i_cannot_exceed_r_tilde():
    with pytest.raises(ValueError):
        PointParams(r_tilde=0.5, r_i=0.6).to_cat_params()


def test_angles_reach_the_state():
    params = PointParams(family="n-angle", angles=(0.1, 0.2)).to_cat_params()
    assert params.angle_list == (0.1, 0.2)
    assert params.family is StateFamily.N_ANGLE


def test_with_value_keeps_r_i_tied_to_r_tilde():
    tied = PointParams(r_tilde=0.5, r_i=0.5).with_value("r_tilde", 1.2)
    assert (tied.r_tilde, tied.r_i) == (1.2, 1.2)
    untied = PointParams(r_tilde=0.5, r_i=0.3).with_value("r_tilde", 1.2)
    assert (untied.r_tilde, untied.r_i) == (1.2, 0.3)


def test_varphi_is_the_phi_family_angle():
    assert PointParams(family="phi-family").with_value("varphi", 0.4).phi == 0.4


def test_explicit_alpha_is_rescaled_and_rotated():
    point = PointParams(alpha=(0.3, 0.4j), mode=2)
    scaled = point.with_value("r_tilde", 1.0)
    assert scaled.alpha == pytest.approx((0.6, 0.8j))
    rotated = point.with_value("theta", 0.0)
    assert rotated.alpha == pytest.approx((0.3, 0.4))
    assert point.stats_mode == 2


def test_unknown_scan_variable():
    with pytest.raises(ValueError):
        PointParams().with_value("omega", 1.0)


def test_bindings():
    bindings = PointParams(r_tilde=0.8, phi=0.1, psi=7.3).bindings()
    assert bindings == {
        "family": "cat-phi-psi",
        "phi": 0.1,
        "psi": 7.3,
        "r_tilde": 0.8,
        "r_i": 0.8,
        "theta": 0.0,
    }
    explicit = PointParams(alpha=(0.5 + 0.1j,), angles=(0.2,)).bindings()
    assert explicit["alpha"] == [[0.5, 0.1]]
    assert explicit["angles"] == [0.2]


def test_parse_alpha():
    assert parse_alpha("0.5,0.2; 0.3") == (0.5 + 0.2j, 0.3 + 0j)
    with pytest.raises(ValueError):
        parse_alpha("1,2,3")
    with pytest.raises(ValueError):
        parse_alpha(" ; ")


def test_parse_angles():
    assert parse_angles("0.1, 0.2,") == (0.1, 0.2)


def test_parse_fixed():
    assert parse_fixed("2=3, 3=0") == {2: 3, 3: 0}
    with pytest.raises(ValueError):
        parse_fixed("2:3")
