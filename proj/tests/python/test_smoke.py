import math

import numpy as np
import pytest

import atomfield


def test_orbital_table_dipole():
    table = atomfield.orbital_coefficients(2, 1)
    assert table[1] == "3/8"
    assert sorted(table) == [1, 3]
    assert atomfield.orbital_coefficients(2, 0) == {}


def test_total_table_keys():
    table = atomfield.total_coefficients("3/2", "3/2")
    assert sorted(table) == [1, 3]


def test_clebsch_gordan():
    text, value = atomfield.clebsch_gordan(1, 0, 1, 0, 2, 0)
    assert value == pytest.approx(math.sqrt(2.0 / 3.0), abs=1e-15)
    assert text


def test_invalid_state_raises():
    with pytest.raises(ValueError, match=r"\|m_l\| <= l"):
        atomfield.State.ls(1, 2)
    with pytest.raises(ValueError):
        atomfield.State.coupled(1, "5/2", "1/2")


def test_field_far_from_nucleus_is_dipolar():
    state = atomfield.State.ls(1, 1, "1/2", n=2)
    field = atomfield.hydrogen_field(state, "orbital")
    assert field.orders == [1]
    r = 200.0
    br_pole, bt_pole = field(r, 0.0)
    br_eq, bt_eq = field(r, math.pi / 2)
    assert float(bt_pole) == pytest.approx(0.0, abs=1e-14)
    assert float(br_eq) == pytest.approx(0.0, abs=1e-14)
    assert float(br_pole) / float(bt_eq) == pytest.approx(2.0, rel=1e-10)


def test_vectorized_matches_scalar():
    field = atomfield.hydrogen_field(atomfield.State.coupled(2, "3/2", "3/2", n=3))
    r = np.array([1.0, 4.0, 9.0])
    theta = np.array([0.3, 1.1, 2.0])
    br, bt = field(r, theta)
    for i in range(3):
        b1, b2 = field(r[i], theta[i])
        assert br[i] == float(b1)
        assert bt[i] == float(b2)


def test_flux_function_constant_on_line():
    field = atomfield.hydrogen_field(atomfield.State.ls(2, 1, "1/2", n=3), "orbital")
    line = field.trace(4.0, 1.2, r_max=1000.0)
    assert line["termination"] == "closed"
    psi = field.flux_function(line["r"], line["theta"])
    assert np.ptp(psi) < 1e-6 * abs(psi[0])


def test_sampled_matches_analytic():
    state = atomfield.State.ls(0, 0, "1/2", n=1)
    radii = np.geomspace(1e-4, 40.0, 4000)
    radial = 2.0 * np.exp(-radii)
    sampled = atomfield.sampled_field(state, radii, radial)
    exact = atomfield.hydrogen_field(state)
    b_s = sampled(2.0, 0.7)
    b_e = exact(2.0, 0.7)
    assert float(b_s[0]) == pytest.approx(float(b_e[0]), rel=1e-4)
    assert float(b_s[1]) == pytest.approx(float(b_e[1]), rel=1e-4)


def test_non_integrable_radial_raises():
    state = atomfield.State.ls(0, 0, "1/2")
    radii = np.geomspace(0.1, 100.0, 200)
    with pytest.raises(atomfield.RadialIntegralError):
        atomfield.sampled_field(state, radii, 1.0 / radii)


def test_verify_tables_passes():
    results = atomfield.verify("tables")
    assert results
    assert all(c["status"] != "fail" for c in results)
