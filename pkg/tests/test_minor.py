import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from hadprod.generators import complete, cycle, fan, path, star
from hadprod.minor import (
    MinorModel,
    ModelVerificationError,
    certified,
    clique_model,
    compose_models,
    product_of_models,
    transpose_model,
    verify_model,
)
from hadprod.product import cartesian_product


def kinds(report):
    return sorted(v.kind for v in report.violations)


def test_valid_model():
    m = MinorModel.build(cycle(6), complete(3), [[0, 1], [2, 3], [4, 5]])
    assert verify_model(m).ok
    assert certified(m) is m


def test_each_violation_kind_is_reported():
    g = path(4)
    assert kinds(verify_model(MinorModel.build(g, complete(2), [[0, 1], [1, 2]]))) == ["overlap"]
    assert kinds(verify_model(MinorModel.build(g, complete(2), [[0, 2], [1]]))) == ["disconnected"]
    assert kinds(verify_model(MinorModel.build(g, complete(2), [[0], [2, 3]]))) == ["missing-adjacency"]
    # all three at once
    bad = MinorModel.build(g, complete(3), [[0, 2], [2], [3]])
    assert kinds(verify_model(bad)) == ["disconnected", "missing-adjacency", "overlap"]
    with pytest.raises(ModelVerificationError):
        certified(bad)


def test_violation_identifies_pattern_vertices():
    rep = verify_model(MinorModel.build(path(4), complete(2), [[0], [2, 3]]))
    assert rep.violations[0].vertices == (0, 1)
    assert rep.to_json() == {"ok": False,
                             "violations": [{"kind": "missing-adjacency", "pattern_vertices": [0, 1]}]}


def test_malformed_models_raise():
    with pytest.raises(ValueError):
        verify_model(MinorModel.build(path(3), complete(2), [[0]]))
    with pytest.raises(ValueError):
        verify_model(MinorModel.build(path(3), complete(2), [[0], []]))
    with pytest.raises(ValueError):
        verify_model(MinorModel.build(path(3), complete(2), [[0], [3]]))


def test_json_round_trip():
    m = clique_model(cycle(6), [[0, 1], [2, 3], [4, 5]])
    assert MinorModel.from_json(m.to_json()) == m
    import json

    assert MinorModel.from_json(json.dumps(m.to_json())) == m


@given(graphs(min_n=1, max_n=6))
def test_trivial_model_verifies(g):
    assert verify_model(MinorModel.trivial(g)).ok


def test_product_of_models_uses_crosses():
    m1 = clique_model(cycle(4), [[0, 1], [2, 3]])
    m2 = MinorModel.trivial(path(2))
    prod = product_of_models(m1, m2)
    assert prod.pattern == cartesian_product(complete(2), path(2))[0]
    # pattern vertex <0, 1>: V_0 x {1} plus {0} x V'_1
    assert prod.branch_sets[1] == (1, 3)
    assert verify_model(prod).ok


@given(st.integers(2, 5), st.integers(2, 5))
def test_product_of_edge_models(a, b):
    m1 = MinorModel.build(cycle(a + 1), complete(2), [[0], list(range(1, a + 1))])
    m2 = MinorModel.build(star(b), complete(2), [[1], [0] + list(range(2, b + 1))])
    assert verify_model(product_of_models(m1, m2)).ok


def test_product_of_models_rejects_invalid_input():
    bad = MinorModel.build(path(3), complete(2), [[0], [2]])
    with pytest.raises(ValueError):
        product_of_models(bad, MinorModel.trivial(path(2)))


def test_compose_models():
    inner = clique_model(cycle(6), [[0, 1], [2, 3], [4, 5]])
    outer = clique_model(complete(3), [[0, 1], [2]])
    comp = compose_models(outer, inner)
    assert comp.host == cycle(6)
    assert comp.branch_sets == ((0, 1, 2, 3), (4, 5))
    with pytest.raises(ValueError):
        compose_models(outer, MinorModel.trivial(cycle(5)))


def test_transpose_model():
    m = product_of_models(MinorModel.trivial(fan(4)), MinorModel.trivial(path(3)))
    t = transpose_model(m, 4, 3)
    assert t.host == cartesian_product(path(3), fan(4))[0]
    assert verify_model(t).ok
    with pytest.raises(ValueError):
        transpose_model(m, 3, 3)
