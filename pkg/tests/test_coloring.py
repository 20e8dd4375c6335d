import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from hadprod.coloring import (
    Coloring,
    chromatic_number,
    critical_subgraph,
    extract_w_minor,
    is_k_colorable,
    max_clique,
)
from hadprod.generators import complete, cycle, fan, path
from hadprod.graph import Graph
from hadprod.minor import verify_model
from hadprod.product import cartesian_product
from oracles import chi_brute, from_nx, to_nx


@pytest.mark.parametrize("g, chi", [
    (Graph(0), 0),
    (Graph(3), 1),
    (complete(1), 1),
    (path(5), 2),
    (cycle(5), 3),
    (complete(6), 6),
    (from_nx(nx.petersen_graph()), 3),
    (from_nx(nx.mycielski_graph(4)), 4),  # Groetzsch graph
    (cartesian_product(complete(4), complete(7))[0], 7),
])
def test_known_chromatic_numbers(g, chi):
    k, col = chromatic_number(g)
    assert k == chi and col.k == chi and col.is_proper(g)


@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    k, col = chromatic_number(g)
    assert k == chi_brute(g) and col.is_proper(g)


@given(graphs(min_n=1, max_n=7))
def test_k_colorable_threshold(g):
    k, _ = chromatic_number(g)
    assert is_k_colorable(g, k - 1) is None
    col = is_k_colorable(g, k)
    assert col is not None and col.is_proper(g)


@given(graphs(max_n=8))
def test_max_clique_matches_networkx(g):
    c = max_clique(g)
    size = max((len(q) for q in nx.find_cliques(to_nx(g))), default=0)
    assert len(c) == size
    assert all(g.has_edge(u, v) for u in c for v in c if u < v)


def test_coloring_checks():
    assert not Coloring(2, (1, 1)).is_proper(complete(2))
    assert not Coloring(2, (1, 3)).is_proper(complete(2))
    assert not Coloring(2, (1,)).is_proper(complete(2))
    c = Coloring(2, (1, 2))
    assert Coloring.from_json(c.to_json()) == c
    with pytest.raises(ValueError):
        is_k_colorable(complete(2), -1)


@given(graphs(min_n=1, max_n=7))
def test_critical_subgraph_is_critical(g):
    k, _ = chromatic_number(g)
    h = critical_subgraph(g)
    assert chromatic_number(h)[0] == k
    for v in range(h.n):
        if h.n > 1:
            assert chromatic_number(h.without_vertex(v))[0] == k - 1
    for u, v in h.edge_list():
        assert chromatic_number(h.without_edge(u, v))[0] == k - 1


def test_critical_subgraph_examples():
    assert critical_subgraph(fan(5)).n == 3  # a triangle
    assert critical_subgraph(cycle(7)) == cycle(7)


@given(graphs(min_n=2, max_n=8))
def test_w_minor_verifies(g):
    if not g.m:
        return
    k, _ = chromatic_number(g)
    m = extract_w_minor(g)
    assert m.pattern == fan(k) and m.host == g
    assert verify_model(m).ok


def test_w_minor_examples():
    assert extract_w_minor(complete(4)).pattern == fan(4)
    assert extract_w_minor(cycle(5)).pattern == fan(3)
    with pytest.raises(ValueError):
        extract_w_minor(Graph(3))
