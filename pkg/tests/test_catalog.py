"""Potential catalog: definitions, mappings, spectra, serialization."""

import json
import math

import numpy as np
import pytest

import susywkb as sw
from susywkb import DomainError


def test_catalog_has_nine_entries():
    specs = sw.catalog_list()
    assert len(specs) == 9
    assert [s.id for s in specs] == list(sw.CATALOG_IDS)


def test_eckart_definition():
    spec = sw.get_spec("eckart")
    assert spec.mapping == "exp"
    # omega(y) = -A(y^2+1)/(y^2-1) + B/A at the defaults A=1, B=16
    y = 2.0
    expect = -1.0 * (y * y + 1) / (y * y - 1) + 16.0
    assert spec.omega_y(y) == pytest.approx(expect)


def test_nonexact1_definition():
    spec = sw.get_spec("nonexact1")
    assert spec.mapping == "identity"
    x = 1.3
    expect = (2 * x**6 + 3 * x**4 - x**2 - 6) / (2 * x * (x * x + 1) * (x * x + 2))
    assert spec.omega_x(x) == pytest.approx(expect)


def test_eckart_superpotential_limit():
    spec = sw.get_spec("eckart")
    assert spec.omega_x(40.0) == pytest.approx(15.0, abs=1e-9)


def test_eckart_v_minus_value():
    spec = sw.get_spec("eckart")
    # A(A - alpha*hbar) = 0 at the defaults, so V_- = 257 - 32*coth(1) at x=1
    expect = 257.0 - 32.0 / math.tanh(1.0)
    assert spec.v_minus(1.0) == pytest.approx(expect, rel=1e-12)


@pytest.mark.parametrize("pot_id", sw.CATALOG_IDS)
def test_v_minus_matches_numeric_derivative(pot_id):
    spec = sw.get_spec(pot_id)
    lo, hi = spec.domain
    a = lo + 0.3 if math.isfinite(lo) else -1.0
    b = hi - 0.3 if math.isfinite(hi) else 1.5
    xs = np.linspace(a, b, 7)
    h = 1e-6
    for x in xs:
        om = spec.omega_x(x)
        dom = (spec.omega_x(x + h) - spec.omega_x(x - h)) / (2.0 * h)
        assert spec.v_minus(x) == pytest.approx(om * om - spec.hbar * dom,
                                                abs=1e-6 * (1 + abs(om) ** 2))


@pytest.mark.parametrize("pot_id", sw.EXACT_IDS)
def test_mapping_consistency(pot_id):
    spec = sw.get_spec(pot_id)
    lo, hi = spec.domain
    a = lo + 0.2 if math.isfinite(lo) else -2.0
    b = hi - 0.2 if math.isfinite(hi) else 2.0
    xs = np.linspace(a, b, 100)
    vals = spec.omega_y(spec.y_of_x(xs))
    assert np.abs(vals.imag).max() <= 1e-10
    assert np.allclose(vals.real, spec.omega_x(xs), atol=1e-12, rtol=1e-12)


@pytest.mark.parametrize("pot_id", sw.EXACT_IDS + ("nonexact1",))
def test_spectrum_ground_state_zero_and_increasing(pot_id):
    spec = sw.get_spec(pot_id)
    assert sw.closed_form_energy(spec, 0) == pytest.approx(0.0, abs=1e-12)
    prev = 0.0
    n = 1
    while n <= 4 and spec.n_is_bound(n):
        E = sw.closed_form_energy(spec, n)
        assert E > prev
        prev = E
        n += 1


def test_eckart_spectrum_values():
    spec = sw.get_spec("eckart")
    assert sw.closed_form_energy(spec, 1) == pytest.approx(189.0)


def test_scarf2_spectrum_value():
    spec = sw.get_spec("scarf2")
    assert sw.closed_form_energy(spec, 1) == pytest.approx(5.0)


@pytest.mark.parametrize("pot_id", sw.EXACT_IDS)
def test_bound_levels_below_threshold(pot_id):
    spec = sw.get_spec(pot_id)
    n = 0
    while n <= 4 and spec.n_is_bound(n):
        assert sw.closed_form_energy(spec, n) < spec.threshold
        n += 1


def test_unbound_level_rejected():
    spec = sw.get_spec("eckart")
    with pytest.raises(DomainError) as err:
        sw.closed_form_energy(spec, 10)
    assert "bound-state count" in str(err.value)


def test_parameter_validation():
    with pytest.raises(DomainError):
        sw.get_spec("eckart", params={"B": 0.5})   # violates B > A^2
    with pytest.raises(DomainError):
        sw.get_spec("rosenmorse2", params={"B": 20.0})  # violates B < A^2
    with pytest.raises(DomainError):
        sw.get_spec("nope")
    with pytest.raises(DomainError):
        sw.get_spec("eckart", params={"Z": 1.0})
    with pytest.raises(DomainError):
        sw.get_spec("eckart", hbar=-1.0)


def test_domain_enforcement():
    spec = sw.get_spec("eckart")
    with pytest.raises(DomainError):
        spec.omega_x(-1.0)


def test_json_round_trip():
    spec = sw.get_spec("eckart", params={"B": 20.0})
    doc = json.dumps(spec.to_json())
    back = sw.spec_from_json(doc)
    assert back.id == "eckart"
    assert back.params["B"] == 20.0
    assert back.omega_y(2.0) == pytest.approx(spec.omega_y(2.0))


def test_y_symmetry_detection():
    assert sw.get_spec("eckart").is_y_symmetric()
    assert not sw.get_spec("scarf2").is_y_symmetric()


def test_nonexact3_flagged_partial():
    assert sw.get_spec("nonexact3").partial
    assert not sw.get_spec("eckart").partial
