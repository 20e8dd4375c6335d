import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from hadprod.generators import complete, cycle, hypercube, path, random_connected_graph, star
from hadprod.graph import Graph, is_connected
from hadprod.product import (
    FactorizationResult,
    ProductLabeling,
    canonical_form,
    canonical_key,
    cartesian_power,
    cartesian_product,
    certificate_holds,
    is_prime_graph,
    prime_factorize,
)
from oracles import from_nx, isomorphic, to_nx

# every composite connected graph on at most 6 vertices: n = 4 or 6 are the only
# composite orders, and the factors must be K_2 with K_2, K_3 or P_3
COMPOSITE_UP_TO_6 = [
    nx.cycle_graph(4),
    nx.cartesian_product(nx.complete_graph(2), nx.complete_graph(3)),
    nx.cartesian_product(nx.complete_graph(2), nx.path_graph(3)),
]


def prime_by_oracle(g: Graph) -> bool:
    h = to_nx(g)
    return not any(nx.is_isomorphic(h, c) for c in COMPOSITE_UP_TO_6)


def same_multiset(a, b) -> bool:
    return sorted(canonical_key(x) for x in a) == sorted(canonical_key(x) for x in b)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.data())
def test_labeling_round_trip(sizes, data):
    lab = ProductLabeling(tuple(sizes))
    flat = data.draw(st.integers(0, lab.order - 1))
    assert lab.encode(lab.decode(flat)) == flat


def test_labeling_first_factor_most_significant():
    lab = ProductLabeling((3, 4))
    assert lab.encode((2, 1)) == 9
    assert lab.decode(5) == (1, 1)
    with pytest.raises(ValueError):
        lab.encode((3, 0))


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_product_matches_networkx(g, h):
    ours, _ = cartesian_product(g, h)
    theirs = nx.cartesian_product(to_nx(g), to_nx(h))
    assert ours.n == g.n * h.n
    assert ours.m == g.m * h.n + h.m * g.n
    if ours.n:
        assert isomorphic(ours, from_nx(theirs))


def test_product_flat_indexing():
    g, lab = cartesian_product(path(2), path(3))
    # <i, j> is i*3 + j; edges change exactly one coordinate
    assert g.has_edge(lab.encode((0, 1)), lab.encode((1, 1)))
    assert g.has_edge(lab.encode((1, 0)), lab.encode((1, 1)))
    assert not g.has_edge(lab.encode((0, 0)), lab.encode((1, 1)))


@pytest.mark.parametrize("base, d", [(cycle(3), 2), (path(3), 3), (complete(2), 4), (star(3), 2)])
def test_power_edge_count(base, d):
    g, lab = cartesian_power(base, d)
    assert g.n == base.n ** d
    assert g.m == base.m * d * base.n ** (d - 1)
    assert lab.sizes == (base.n,) * d


def test_power_examples():
    assert cartesian_power(cycle(3), 2)[0].m == 18
    assert cartesian_power(complete(2), 3)[0] == hypercube(3)
    with pytest.raises(ValueError):
        cartesian_power(cycle(3), 0)


@given(graphs(min_n=1, max_n=7), st.randoms())
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    c1, p1 = canonical_form(g)
    c2, _ = canonical_form(g.relabel(perm))
    assert c1 == c2
    assert g.relabel(p1) == c1


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_canonical_key_decides_isomorphism(a, b):
    assert (canonical_key(a) == canonical_key(b)) == isomorphic(a, b)


def test_factorize_known_products():
    g, _ = cartesian_product(cycle(6), complete(2))
    res = prime_factorize(g)
    assert same_multiset(res.factors, [cycle(6), complete(2)])
    assert certificate_holds(g, res)
    res = prime_factorize(hypercube(4))
    assert same_multiset(res.factors, [complete(2)] * 4)
    assert certificate_holds(hypercube(4), res)


def test_factorize_prime_graphs():
    for g in (complete(2), cycle(5), complete(4), path(4), star(3)):
        res = prime_factorize(g)
        assert len(res.factors) == 1 and is_prime_graph(g)


def test_factorize_errors():
    with pytest.raises(ValueError):
        prime_factorize(Graph(3, [(0, 1)]))
    with pytest.raises(ValueError):
        prime_factorize(complete(1))


def test_factorization_json_round_trip():
    g, _ = cartesian_product(cycle(3), path(3))
    res = prime_factorize(g)
    again = FactorizationResult.from_json(res.to_json())
    assert again.factors == res.factors and again.coordinates == res.coordinates
    assert again.labeling.sizes == res.labeling.sizes


@given(graphs(min_n=2, max_n=6, connected=True))
def test_primality_matches_oracle(g):
    assert is_prime_graph(g) == prime_by_oracle(g)


def test_trees_up_to_six_are_prime():
    for n in range(2, 7):
        for t in nx.nonisomorphic_trees(n):
            # a nontrivial product contains a 4-cycle
            assert is_prime_graph(from_nx(t))


@pytest.mark.parametrize("seed", range(25))
def test_factorize_random_products(seed):
    rng = random.Random(seed)
    factors = []
    while len(factors) < rng.randint(2, 3):
        f = random_connected_graph(rng.randint(2, 5), 0.5, rng)
        if prime_by_oracle(f):
            factors.append(f)
    g = factors[0]
    for f in factors[1:]:
        g, _ = cartesian_product(g, f)
    assert is_connected(g)
    res = prime_factorize(g)
    assert same_multiset(res.factors, factors)
    assert certificate_holds(g, res)
