import pytest

from lpa_wreath.action import ActionAlgebra, associativity_probe, action_mul, biset_axioms_check
from lpa_wreath.coefficients import DiagonalAlgebra, ScalarAlgebra
from lpa_wreath.graph import Path
from lpa_wreath.wreath import X0, BridgePath, bridge_biset, loop_extension, parse_extension
from lpa_wreath.wreath.probes import corrupted_biset

from .conftest import TOEPLITZ


def P(src, *edges):
    return Path(src, tuple(edges))


@pytest.fixture
def biset():
    return bridge_biset(loop_extension(ScalarAlgebra()), 2, 3)


@pytest.fixture
def alg(biset):
    return ActionAlgebra(biset, ScalarAlgebra())


def test_loop_biset_axioms(biset):
    assert biset_axioms_check(biset, biset.s_pool, biset.x_pool) == []


def test_corrupted_fails_property_one():
    b = corrupted_biset(loop_extension(ScalarAlgebra()))
    bad = biset_axioms_check(b, b.s_pool, b.x_pool)
    assert any(msg.startswith("(1)") for msg in bad)


def test_empty_samples(biset):
    assert biset_axioms_check(biset, [], []) == []


def test_action_rules(alg):
    e = BridgePath(P("v"), "e")
    ce = BridgePath(P("v", "c"), "e")
    cstar = (P("v"), P("v", "c"))
    c = (P("v", "c"), P("v"))
    one = 1
    # c^* e = x0 kills the unit
    u = alg.element({cstar: one})
    a = alg.element(mat={(e, e): one})
    assert not action_mul(u, a)
    assert action_mul(alg.element({c: one}), a) == alg.element(mat={(ce, e): one})
    assert a * alg.element(mat={(e, ce): 3}) == alg.element(mat={(e, ce): 3})
    assert not (alg.element(mat={(e, X0): one}) * alg.element({c: one}))


def test_mismatched(alg, biset):
    other = ActionAlgebra(biset, ScalarAlgebra())
    with pytest.raises(ValueError):
        action_mul(alg.element({}), other.element({}))


def test_associativity_loop(alg):
    assert associativity_probe(alg, 1000, 42)
    assert associativity_probe(alg, 0, 0)


def test_associativity_toeplitz_ext():
    from lpa_wreath.graph import parse_graph

    g = parse_graph(TOEPLITZ)
    eg = parse_extension("idem p\nidem q\nbridge e1 u p\nbridge e2 u q\n", g)
    A = eg.coeff
    assert isinstance(A, DiagonalAlgebra)
    b = bridge_biset(eg)
    assert biset_axioms_check(b, b.s_pool, b.x_pool) == []
    assert associativity_probe(ActionAlgebra(b, A), 500, 1)


def test_corrupted_associativity_counterexample():
    b = corrupted_biset(loop_extension(ScalarAlgebra()))
    rep = associativity_probe(ActionAlgebra(b, ScalarAlgebra()), 1000, 0)
    assert not rep
    assert "(a_{x,y} s) b_{z,t}" in rep.failures[0]
