import json

import pytest

import harmconv


def test_construct_and_evaluate():
    f0 = harmconv.right_halfplane_f0(64)
    assert f0.order == 64
    assert f0.class_tag == "H0"
    w = f0(0.3 + 0.0j)
    assert abs(w) > 0
    assert f0.jacobian(0.3 + 0.0j) > 0

    conv = harmconv.convolve(f0, f0)
    q = conv.dilatation()
    assert abs(q(0.2 + 0.1j)) < 1.0

    rot = harmconv.rotate(f0, 1j)
    assert abs(rot.h.coeffs[1] - 1.0) < 1e-15


def test_map_spec_round_trip():
    f = harmconv.build_map(json.dumps({
        "type": "slanted_halfplane_canonical",
        "a": {"re": 0.2, "im": 0.3},
        "gamma": 0.45,
        "order": 16,
    }))
    back = harmconv.build_map(harmconv.serialize(f))
    assert back.order == f.order
    assert back.h.coeffs == f.h.coeffs

    with pytest.raises(ValueError):
        harmconv.build_map("{}")


def test_dilatation_routes_agree():
    f0 = harmconv.right_halfplane_f0(96)
    q = harmconv.convolution_dilatation_f_a0(0.0, f0)
    z = 0.25 - 0.2j
    closed = z * (1 + 2 * z) / (2 + z)
    assert abs(q(z) - closed) < 1e-10


def test_grid_diagnostics():
    f0 = harmconv.right_halfplane_f0(512)
    radii = [0.2, 0.5, 0.8]
    rep = harmconv.local_univalence(f0, radii=radii, angles=64)
    assert rep["locally_univalent"]
    assert rep["max_dilatation_modulus"] == pytest.approx(0.8, abs=1e-9)

    cert = harmconv.direction_convexity(f0, 0.0, radii=radii, angles=64)
    assert cert["min_real_part"] > 0

    margin = harmconv.halfplane_membership(f0, 0j, 0.0, radii=radii,
                                           angles=64)
    assert margin > -1e-9


def test_zero_counting():
    rep = harmconv.count_zeros_in_disk([1.0, -2.5, 1.0])
    assert rep["zeros_inside"] == 1
    assert rep["zeros_outside"] == 1

    cubic = harmconv.theorem43_cubic(0.5, 0.2, "minus_one")
    assert cubic["c2"] == pytest.approx(-1.5)
    assert cubic["condition_holds"]


def test_scenarios():
    ids = harmconv.scenario_ids()
    assert "th2.1" in ids and len(ids) == 8

    res = harmconv.run_scenario("th4.3-case1", order=256,
                                grid_radii=[0.3, 0.5], grid_angles=64)
    assert res["verdict"] == "pass"
    assert res["document"]["reports"]["cubic"]["zeros_on_boundary"] == 1


def test_render(tmp_path):
    f0 = harmconv.right_halfplane_f0(64)
    csv_path = tmp_path / "f0.csv"
    harmconv.render_csv(f0, str(csv_path), rings=2, rays=3, samples=8,
                        max_radius=0.8)
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "re_z,im_z,re_w,im_w,jacobian,abs_dilatation"
    assert len(lines) == 1 + 2 * 9 + 3 * 8

    with pytest.raises(OSError):
        harmconv.render_svg(f0, str(tmp_path / "missing" / "f0.svg"))
