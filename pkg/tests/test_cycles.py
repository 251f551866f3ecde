import random

import pytest
from hypothesis import given, settings, strategies as st

from codegb.code import BinaryMatrix, pack, rank, unpack
from codegb.cycles import (
    Graph,
    cycle_space_code,
    fundamental_cycle_basis,
    incidence_check_matrix,
    minimal_cycle_basis,
    minimal_cycles,
    oracle_minimal_basis_length,
    precedes,
)
from codegb.groebner import Binomial, compute_gb
from codegb.term import parse_word

from conftest import example1_code, house_graph, random_connected_graph

INCIDENCE = ["11000", "10010", "10001", "01100", "00110", "00011"]


def test_incidence_matrix_matches_printed_one():
    assert incidence_check_matrix(house_graph()).to_strings() == INCIDENCE


def test_cycle_space_is_example1_code():
    c = cycle_space_code(house_graph())
    assert set(c.codewords()) == set(example1_code().codewords())


def test_house_minimal_cycles_and_basis():
    g = house_graph()
    assert minimal_cycles(g) == (3, {(0, 1, 1, 0, 0, 1)})
    basis = minimal_cycle_basis(g)
    assert basis.total_length == 7
    assert set(basis.cycles) == {(0, 1, 1, 0, 0, 1), (1, 1, 0, 1, 1, 0)}


def test_triangle():
    g = Graph(3, ((1, 2), (2, 3), (1, 3)))
    assert minimal_cycles(g) == (3, {(1, 1, 1)})
    assert minimal_cycle_basis(g).total_length == 3


def test_tree_has_empty_basis():
    g = Graph(4, ((1, 2), (2, 3), (2, 4)))
    assert g.betti_number() == 0
    assert minimal_cycle_basis(g).cycles == ()
    with pytest.raises(ValueError):
        minimal_cycles(g)
    with pytest.raises(ValueError):
        cycle_space_code(Graph(3, ()))


def test_k4():
    edges = tuple((a, b) for a in range(1, 5) for b in range(a + 1, 5))
    g = Graph(4, edges)
    d, tri = minimal_cycles(g)
    assert d == 3 and len(tri) == 4
    basis = minimal_cycle_basis(g)
    assert len(basis.cycles) == 3 and basis.total_length == 9
    assert len(cycle_space_code(g).codewords()) - 1 == 7


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, ((1, 1),))
    with pytest.raises(ValueError):
        Graph(3, ((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        Graph(3, ((1, 4),))


def test_disconnected_betti_number():
    g = Graph(6, ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)))
    assert g.components() == 2
    assert g.betti_number() == 2
    assert minimal_cycle_basis(g).total_length == 6


def test_fundamental_cycles_are_cycles():
    g = house_graph()
    f = fundamental_cycle_basis(g)
    assert f.nrows == 2
    code = cycle_space_code(g)
    assert all(code.is_codeword(unpack(r, g.m)) for r in f.rows)


def b(text, n=6):
    h, t = text.split(" - ")
    return Binomial(parse_word(h, n), parse_word(t, n))


def test_precedes_examples():
    assert precedes(b("x3*x6 - x2"), b("x2*x4 - x1*x5"))
    assert precedes(b("x2*x3 - x6"), b("x2*x6 - x3"))
    assert not precedes(b("x1*x3*x4 - x5*x6"), b("x4*x5 - x1*x2"))
    assert not precedes(b("x2*x3 - x6"), b("x2*x3 - x6"))


@pytest.mark.parametrize("seed", range(40))
def test_random_graphs_against_oracle(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng)
    assert g.components() == 1
    code = cycle_space_code(g)
    assert code.k == g.betti_number() == g.m - g.vertex_count + 1
    f = fundamental_cycle_basis(g)
    assert rank(f) == code.k
    assert all(code.is_codeword(unpack(r, g.m)) for r in f.rows)
    basis = minimal_cycle_basis(g)
    assert len(basis.cycles) == code.k
    if code.k:
        assert rank(BinaryMatrix(tuple(pack(c) for c in basis.cycles), g.m)) == code.k
        assert basis.total_length == oracle_minimal_basis_length(code)
        d, cyc = minimal_cycles(g)
        assert all(sum(c) == d for c in cyc)


graphs = st.integers(2, 8).flatmap(lambda v: st.sets(
    st.tuples(st.integers(1, v), st.integers(1, v)).filter(lambda e: e[0] < e[1]), min_size=1, max_size=12,
).map(lambda es: Graph(v, tuple(sorted(es)))))


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_cycle_space_dimension_and_basis(g):
    code = cycle_space_code(g)
    assert code.k == g.betti_number()
    assert fundamental_cycle_basis(g).nrows == code.k
    basis = minimal_cycle_basis(g)
    assert len(basis.cycles) == code.k
    for c in basis.cycles:
        # every vertex has even degree in a cycle
        deg = [0] * (g.vertex_count + 1)
        for u, v in g.edges_of(c):
            deg[u] += 1
            deg[v] += 1
        assert all(d % 2 == 0 for d in deg)
    if code.k:
        assert basis.total_length == oracle_minimal_basis_length(code)
