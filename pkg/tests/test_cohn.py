import itertools
import random

import pytest

from lpa_wreath.cohn import (
    CohnAlgebra,
    Lemma5Family,
    Lemma5HypothesisError,
    ck_prime,
    cohn_mul,
    cohn_relations_check,
    degree,
    lemma5_verify,
    sg_mul,
    sg_star,
    star,
)
from lpa_wreath.graph import GraphError, Path, parse_graph
from lpa_wreath.scalars import GF


def P(src, *edges):
    return Path(src, tuple(edges))


def test_sg_mul_examples(loop, toeplitz):
    # c^* . c = v
    assert sg_mul((P("v"), P("v", "c")), (P("v", "c"), P("v"))) == (P("v"), P("v"))
    # c^* . f = 0
    assert sg_mul((P("u"), P("u", "c")), (P("u", "f"), P("v"))) is None
    assert sg_mul((P("v", "c"), P("v")), (P("v", "c"), P("v"))) == (P("v", "c", "c"), P("v"))
    assert sg_mul(None, (P("v"), P("v"))) is None


def test_sg_star():
    m = (P("v", "c"), P("v"))
    assert sg_star(m) == (P("v"), P("v", "c"))
    assert sg_star(None) is None


def test_star_examples(loop):
    C = CohnAlgebra(loop)
    assert star(C.parse("c")) == C.parse("c^*")
    assert star(C.parse("v")) == C.parse("v")
    assert star(C.parse("2*c.c^*")) == C.parse("2*c.c^*")


def test_cohn_mul_examples(loop, line):
    C = CohnAlgebra(loop)
    assert not cohn_mul(C.parse("v - c.c^*"), C.parse("c"))
    L = CohnAlgebra(line)
    ee = L.parse("e") * L.parse("e^*")
    assert str(ee) == "e.e^*"
    assert not (C.parse("c") * C.zero)
    with pytest.raises(GraphError):
        cohn_mul(C.parse("c"), L.parse("e"))


def test_ck_prime(loop, toeplitz, line):
    assert ck_prime(CohnAlgebra(loop), "v") == CohnAlgebra(loop).parse("v - c.c^*")
    T = CohnAlgebra(toeplitz)
    assert ck_prime(T, "u") == T.parse("u - c.c^* - f.f^*")
    with pytest.raises(GraphError, match="no CK element at sink"):
        ck_prime(CohnAlgebra(line), "v")


def test_lemma5(loop, toeplitz):
    C = CohnAlgebra(loop)
    c = P("v", "c")
    assert lemma5_verify(C, [Lemma5Family("v", pairs=[(c, c)], plain=False)])
    assert lemma5_verify(C, [])
    T = CohnAlgebra(toeplitz)
    assert lemma5_verify(T, [Lemma5Family("u", left=[P("u", "c")])])


def test_lemma5_larger_family(loop):
    C = CohnAlgebra(loop)
    paths = [P("v", *("c",) * k) for k in (1, 2)]
    fam = Lemma5Family("v", pairs=list(itertools.product(paths, paths)), left=paths, right=paths)
    assert lemma5_verify(C, [fam])


def test_lemma5_hypotheses(loop, toeplitz):
    C = CohnAlgebra(loop)
    c = P("v", "c")
    with pytest.raises(Lemma5HypothesisError):
        lemma5_verify(C, [Lemma5Family("v", pairs=[(c, c), (c, c)])])
    with pytest.raises(Lemma5HypothesisError):
        lemma5_verify(C, [Lemma5Family("v", left=[P("v")])])
    T = CohnAlgebra(toeplitz)
    with pytest.raises(Lemma5HypothesisError):
        lemma5_verify(T, [Lemma5Family("u", left=[P("u", "f")])])


@pytest.mark.parametrize("name", ["loop", "line", "toeplitz", "cycle", "three"])
def test_relations(sample_graphs, name):
    rep = cohn_relations_check(CohnAlgebra(sample_graphs[name]))
    assert rep, str(rep)


@pytest.mark.parametrize("name", ["loop", "toeplitz", "cycle", "three"])
def test_sg_associative(sample_graphs, name):
    C = CohnAlgebra(sample_graphs[name])
    monos = [m for m in C.monomials_up_to(3) if len(m[0].edges) + len(m[1].edges) <= 3]
    for x, y, z in itertools.product(monos, repeat=3):
        assert sg_mul(sg_mul(x, y), z) == sg_mul(x, sg_mul(y, z))


@pytest.mark.parametrize("name", ["loop", "toeplitz", "three"])
def test_star_anti_automorphism_and_grading(sample_graphs, name):
    C = CohnAlgebra(sample_graphs[name])
    rng = random.Random(5)
    for _ in range(200):
        x, y = C.random_element(rng), C.random_element(rng)
        assert star(x * y) == star(y) * star(x)
    monos = C.monomials_up_to(2)
    for x, y in itertools.product(monos, repeat=2):
        z = sg_mul(x, y)
        if z is not None:
            assert degree(z) == degree(x) + degree(y)


def test_finite_field(loop):
    C = CohnAlgebra(loop, GF(3))
    x = C.parse("2*c + c")
    assert not x


def test_parse_errors(loop):
    C = CohnAlgebra(loop)
    with pytest.raises(Exception):
        C.parse("d")
    with pytest.raises(Exception):
        C.parse("c +")


def test_deterministic_printing():
    g = parse_graph("vertex u\nedge b u u\nedge a u u\n")
    C = CohnAlgebra(g)
    x = C.parse("b.b^* + a + u + a^*")
    assert str(x) == str(C.parse("a^* + u + b.b^* + a"))
