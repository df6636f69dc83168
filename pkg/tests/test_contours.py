"""Contour engine: census, residues, closure, quantization, defect."""

import math

import pytest

import susywkb as sw
from susywkb import DomainError
from susywkb.swkb import swkb_integral

from conftest import decompose_of, mid_spectrum_energy, spec_of


SQ2 = math.sqrt(2.0)


def test_eckart_census():
    cen = sw.census(spec_of("eckart"), 189.0)
    finite = sorted(p for p in cen.fixed_poles if p != "infinity")
    assert finite == [(-1 + 0j), 0j, (1 + 0j)]
    assert "infinity" in cen.fixed_poles
    assert len(cen.branch_points) == 4
    assert len(cen.branch_cuts) == 2
    kinds = sorted(c.kind for c in cen.branch_cuts)
    assert kinds == ["classical", "mirror"]


def test_scarf2_census_poles():
    cen = sw.census(spec_of("scarf2"), 5.0)
    finite = sorted((p for p in cen.fixed_poles if p != "infinity"),
                    key=lambda z: z.imag)
    assert finite == [-1j, 0j, 1j]


def test_nonexact1_census():
    cen = sw.census(spec_of("nonexact1"), 8.0)
    finite = sorted((p for p in cen.fixed_poles if p != "infinity"),
                    key=lambda z: z.imag)
    assert finite == pytest.approx([-1j * SQ2, -1j, 0j, 1j, 1j * SQ2])
    assert len(cen.branch_points) == 12
    assert len(cen.branch_cuts) == 6


def test_exactly_one_classical_cut():
    for pot_id in sw.CATALOG_IDS:
        cen = sw.census(spec_of(pot_id), mid_spectrum_energy(pot_id))
        assert sum(c.kind == "classical" for c in cen.branch_cuts) == 1


def test_eckart_pole_contributions():
    spec = spec_of("eckart")
    assert sw.pole_contribution(spec, 189.0, 0.0) == pytest.approx(-10.0, abs=1e-9)
    assert sw.pole_contribution(spec, 189.0, 1.0) == pytest.approx(1.0, abs=1e-9)
    assert sw.pole_contribution(spec, 189.0, -1.0) == pytest.approx(1.0, abs=1e-9)


def test_eckart_infinity_contribution():
    assert sw.infinity_contribution(spec_of("eckart"), 189.0) == pytest.approx(
        -6.0, abs=1e-9)


def test_unknown_pole_rejected():
    with pytest.raises(DomainError):
        sw.pole_contribution(spec_of("eckart"), 189.0, 5.0 + 5j)


def test_eckart_decomposition_golden():
    dec = decompose_of("eckart", 189.0)
    assert dec.closure_residual <= 1e-9
    assert dec.J_GammaR == pytest.approx(-6.0, abs=1e-9)
    assert dec.J_classical_cut == pytest.approx(1.0, abs=1e-9)
    assert dec.J_mirror_cut == pytest.approx(1.0, abs=1e-9)
    assert dec.J_other_cuts == ()


@pytest.mark.parametrize("pot_id", sw.EXACT_IDS)
def test_mirror_symmetry_of_cut_values(pot_id):
    dec = decompose_of(pot_id, mid_spectrum_energy(pot_id))
    assert abs(dec.J_classical_cut - dec.J_mirror_cut) <= 1e-9


@pytest.mark.parametrize("pot_id", sw.CATALOG_IDS)
def test_classical_cut_matches_real_axis_swkb(pot_id):
    E = mid_spectrum_energy(pot_id)
    dec = decompose_of(pot_id, E)
    assert dec.J_classical_cut.real == pytest.approx(
        swkb_integral(spec_of(pot_id), E), abs=1e-9)
    assert abs(dec.J_classical_cut.imag) <= 1e-9


def test_quantize_by_contours_eckart():
    spec = spec_of("eckart")
    assert sw.quantize_by_contours(spec, 0).energy == 0.0
    r = sw.quantize_by_contours(spec, 1)
    assert r.energy == pytest.approx(189.0, abs=1e-6)
    assert r.method == "contour"


def test_quantize_by_contours_refuses_extra_cuts():
    with pytest.raises(DomainError) as err:
        sw.quantize_by_contours(spec_of("nonexact1"), 1)
    assert "defect_report" in str(err.value)


def test_defect_vanishes_for_eckart_control():
    rep = sw.defect_report(spec_of("eckart"), 189.0, 1)
    assert abs(rep.J_obc_direct) <= 1e-9
    assert abs(rep.J_obc_indirect) <= 1e-8


def test_defect_ground_state_trivial():
    rep = sw.defect_report(spec_of("nonexact1"), 0.0, 0)
    assert rep.J_obc_direct == 0.0
    assert rep.J_obc_indirect == 0.0
    assert rep.consistency_gap == 0.0


def test_nonexact1_defect_two_ways():
    rep = sw.defect_report(spec_of("nonexact1"), 4.0, 1)
    assert abs(rep.J_obc_direct) > 1e-6          # non-exactness mechanism
    assert rep.consistency_gap <= 1e-6


def test_pole_circle_deformation_invariance():
    # same pole, two different probe energies that move branch points around:
    # the residue of the y=+1 pole stays A/alpha = 1
    spec = spec_of("eckart")
    for E in (100.0, 189.0):
        assert sw.pole_contribution(spec, E, 1.0) == pytest.approx(1.0, abs=1e-9)
