import math

import numpy as np
import pytest

import spinwedge as sw


def test_wedge_of_complete_four():
    w = sw.build_wedge_graph(sw.complete_graph(4), 2)
    assert w.num_vertices == 6
    assert len(w.signed_edges) == 12
    c = sw.signed_matrix(w)
    assert np.array_equal(c, sw.alt_delta_oracle(sw.complete_graph(4), 2))
    assert np.array_equal(np.abs(c), sw.wedge_adjacency(w))
    assert sorted(np.round(np.linalg.eigvalsh(c), 9)) == [-2, -2, -2, 2, 2, 2]


def test_blocks_match_wedge_matrices():
    g = sw.erdos_renyi(6, 0.5, 1)
    for k in range(7):
        w = sw.build_wedge_graph(g, k)
        assert np.array_equal(sw.block_hamiltonian(g, k, "xy"), sw.wedge_adjacency(w))
        assert np.array_equal(sw.block_hamiltonian(g, k, "heis"), sw.wedge_laplacian(w))


def test_full_spectrum_is_union_of_blocks():
    g = sw.cycle_graph(5)
    full = np.linalg.eigvalsh(sw.full_hamiltonian(g, "heis", 0.5))
    blocks = np.sort(np.concatenate([sw.block_spectrum(g, k, "heis", 0.5) for k in range(6)]))
    assert np.allclose(full, blocks, atol=1e-9)


def test_closed_forms():
    assert np.allclose(sw.johnson_spectrum(4, 2), [-2, -2, 0, 0, 0, 4])
    assert len(sw.xy_path_spectrum(6, 3)) == 20
    assert min(sw.complete_graph_spectrum(6, "xy")) == pytest.approx(-3.0, abs=1e-9)
    value, vec = sw.lift_eigenvector(sw.path_graph(3), [0, 2])
    assert value == pytest.approx(0.0, abs=1e-12)
    c = sw.signed_matrix(sw.build_wedge_graph(sw.path_graph(3), 2))
    assert np.linalg.norm(c @ vec - value * vec) < 1e-9


def test_perfect_transfer():
    assert sw.transfer_fidelity(sw.path_graph(2), 0, 1, [math.pi / 2])[0] == pytest.approx(1.0, abs=1e-9)
    assert sw.transfer_fidelity(sw.path_graph(3), 0, 2, [math.pi / math.sqrt(2)])[0] == pytest.approx(1.0, abs=1e-9)
    psi = np.zeros(3, dtype=complex)
    psi[0] = 1
    out = sw.evolve(sw.path_graph(3), psi, 1, 1.0)
    assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-12)


def test_isomorphism_and_graph_io():
    w = sw.build_wedge_graph(sw.path_graph(6), 5).as_graph()
    assert sw.find_isomorphism(w, sw.path_graph(6)) is not None
    assert sw.find_isomorphism(sw.path_graph(4), sw.cycle_graph(4)) is None
    g = sw.Graph(3, [(0, 1), (1, 2)])
    assert sw.Graph.from_json(g.to_json()) == g
    assert g.edges == [(0, 1), (1, 2)]


def test_verify_subset():
    report = sw.verify(["complete:4", "path:4"], random_states=2)
    assert report["passed"]
    assert any(c["check"] == "signed_vs_alt_oracle" for c in report["checks"])


def test_errors():
    with pytest.raises(ValueError):
        sw.build_wedge_graph(sw.path_graph(3), 5)
    with pytest.raises(ValueError):
        sw.Graph(2, [(0, 0)])
    with pytest.raises(sw.CapacityError):
        sw.full_hamiltonian(sw.path_graph(15))
    with pytest.raises(sw.ParseError):
        sw.Graph.from_json('{"n": 2, "edges": [')
