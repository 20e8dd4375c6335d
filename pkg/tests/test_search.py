import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from hadprod.generators import complete, cycle, fan, grid, hypercube, path, random_graph, star
from hadprod.graph import Graph
from hadprod.minor import verify_model
from hadprod.product import cartesian_product
from hadprod.search import (
    SearchBudgetExceeded,
    edge_count_bound,
    find_clique_minor,
    hadwiger_exact,
    has_minor,
)
from oracles import eta_brute, from_nx, has_minor_brute


def prod(a, b):
    return cartesian_product(a, b)[0]


# values checked against the brute-force partition oracle where it is feasible
# (up to 10 vertices) and otherwise by hand: planar graphs have no K_5 and a
# K_h model needs h(h-1)/2 edges between branch sets
KNOWN = [
    ("C4", cycle(4), 3),
    ("C4xK2", prod(cycle(4), complete(2)), 4),
    ("C7xK2", prod(cycle(7), complete(2)), 4),
    ("R3", grid(3), 4),
    ("R4", grid(4), 4),
    ("K2xK2", prod(complete(2), complete(2)), 3),
    ("K3xK3", prod(complete(3), complete(3)), 5),
    ("K4xK3", prod(complete(4), complete(3)), 6),
    ("K4xK4", prod(complete(4), complete(4)), 7),
    ("Q3", hypercube(3), 4),
    ("Q4", hypercube(4), 6),
    ("Petersen", from_nx(nx.petersen_graph()), 5),
    ("K1", complete(1), 1),
    ("empty", Graph(0), 0),
    ("3 isolated", Graph(3), 1),
]


@pytest.mark.parametrize("name, g, eta", KNOWN, ids=[k[0] for k in KNOWN])
def test_known_hadwiger_numbers(name, g, eta):
    res = hadwiger_exact(g)
    assert res.exact and res.value == eta
    assert res.witness.pattern.n == eta and verify_model(res.witness).ok
    assert eta <= edge_count_bound(g)


@given(graphs(max_n=8))
def test_hadwiger_matches_brute_force(g):
    res = hadwiger_exact(g)
    assert res.exact and res.value == eta_brute(g)


@pytest.mark.parametrize("seed", range(12))
def test_hadwiger_matches_brute_force_ten_vertices(seed):
    rng = random.Random(seed)
    g = random_graph(10, rng.uniform(0.3, 0.7), rng)
    assert hadwiger_exact(g).value == eta_brute(g)


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=4))
def test_has_minor_matches_brute_force(host, pattern):
    if pattern.n > host.n:
        return
    model = has_minor(host, pattern)
    assert (model is not None) == has_minor_brute(host, pattern)
    if model is not None:
        assert model.pattern == pattern and verify_model(model).ok


def test_has_minor_examples():
    assert has_minor(cycle(6), cycle(4)) is not None
    assert has_minor(star(4), path(4)) is None
    assert has_minor(fan(6), fan(4)) is not None
    assert has_minor(grid(3), complete(5)) is None
    empty = has_minor(cycle(3), Graph(0))
    assert empty is not None and empty.branch_sets == ()


def test_budget_exhaustion_is_not_a_no():
    with pytest.raises(SearchBudgetExceeded):
        find_clique_minor(hypercube(5), 8, budget=5)
    res = hadwiger_exact(hypercube(5), budget=5)
    assert not res.exact
    assert verify_model(res.witness).ok and res.witness.pattern.n == res.value


def test_edge_count_bound():
    assert edge_count_bound(complete(5)) == 5
    assert edge_count_bound(cycle(4)) == 3
    assert edge_count_bound(Graph(4)) == 1
