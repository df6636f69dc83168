"""Numerov oracle: eigenvalues, node counts, quantum action, QHJ residual."""

import numpy as np
import pytest

import susywkb as sw
from susywkb import DomainError
from susywkb.numerov import grid_solution
from susywkb.swkb import turning_points

from conftest import numerov_of, spec_of


def test_eckart_ground_state_is_zero():
    assert abs(numerov_of("eckart", 0)) <= 1e-4


def test_eckart_first_level():
    assert numerov_of("eckart", 1) == pytest.approx(189.0, abs=1e-4 * 190.0)


def test_scarf2_levels():
    spec = spec_of("scarf2")
    for n in (1, 2):
        En = spec.spectrum(n)
        assert numerov_of("scarf2", n) == pytest.approx(
            En, abs=1e-4 * (1 + abs(En)))


def test_nonexact1_linear_spectrum():
    for n in (0, 1, 2):
        assert numerov_of("nonexact1", n) == pytest.approx(4.0 * n, abs=1e-4)


def test_eigenvalues_increase_with_node_count():
    vals = [numerov_of("rosenmorse2", n) for n in (0, 1, 2)]
    assert vals[0] < vals[1] < vals[2]


def test_unbound_level_rejected():
    with pytest.raises(DomainError):
        sw.numerov_eigenvalue(spec_of("eckart"), 7)


def grid_of(pot_id, n, factor=1):
    spec = spec_of(pot_id)
    hint = spec.spectrum(n) if spec.spectrum else None
    pts = factor * 20000 + 1
    return grid_solution(spec, n, n_points=pts, E_hint=hint)


def test_node_count_matches_level():
    sol = grid_of("eckart", 1)
    assert sol.node_count == 1
    sol2 = grid_of("scarf2", 2)
    assert sol2.node_count == 2


def test_nodes_lie_between_turning_points():
    spec = spec_of("eckart")
    sol = grid_of("eckart", 2)
    tp = turning_points(spec, sol.energy)
    x, psi = sol.grid, sol.psi
    node_x = x[np.where(psi[:-1] * psi[1:] < 0.0)[0]]
    assert np.all(node_x > tp.x1) and np.all(node_x < tp.x2)


def test_quantum_action_counts_nodes():
    spec = spec_of("eckart")
    sol = grid_of("eckart", 2)
    assert sw.quantum_action(sol, spec, sol.energy) == pytest.approx(2.0)
    sol0 = grid_of("eckart", 0)
    assert sw.quantum_action(sol0, spec, sol0.energy) == 0.0


def test_qhj_residual_shrinks_under_refinement():
    spec = spec_of("scarf2")
    s1 = grid_of("scarf2", 1, factor=1)
    s2 = grid_of("scarf2", 1, factor=2)
    r1 = sw.qhj_residual(s1, spec, s1.energy)
    r2 = sw.qhj_residual(s2, spec, s2.energy)
    assert r1 / r2 >= 3.0


def test_qhj_residual_is_small_for_converged_state():
    spec = spec_of("eckart")
    sol = grid_of("eckart", 1)
    assert sw.qhj_residual(sol, spec, sol.energy) <= 1e-4 * (1 + sol.energy)


def test_dump_wavefunction(tmp_path):
    sol = grid_of("eckart", 0)
    path = tmp_path / "wf.csv"
    sw.dump_wavefunction(sol, str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "x,psi"
    assert len(lines) == len(sol.grid) + 1
