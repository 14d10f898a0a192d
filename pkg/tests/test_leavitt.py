import itertools
import random

import pytest

from lpa_wreath.cohn import CohnAlgebra, ck_prime, cohn_mul
from lpa_wreath.graph import GraphError, Path
from lpa_wreath.leavitt import (
    LeavittAlgebra,
    RewriteMeasureError,
    graded_component,
    graded_simple,
    homogeneous_degrees,
    lpa_mul,
    lpa_normal_form,
    special_edge,
)

GRAPHS = ["loop", "line", "toeplitz", "cycle", "three"]


def test_special_edge(loop, toeplitz, line):
    assert special_edge(loop, "v") == "c"
    assert special_edge(toeplitz, "u") == "c"
    with pytest.raises(GraphError):
        special_edge(line, "v")
    assert LeavittAlgebra(toeplitz).special_edge("u") == "c"


def test_normal_form_examples(loop, toeplitz):
    C, L = CohnAlgebra(loop), LeavittAlgebra(loop)
    assert lpa_normal_form(L, C.parse("c.c^*")) == L.parse("v")
    assert lpa_normal_form(L, C.parse("c.c.c^*")) == L.parse("c")
    T = LeavittAlgebra(toeplitz)
    assert str(lpa_normal_form(T, CohnAlgebra(toeplitz).parse("c.c^*"))) == str(T.parse("u - f.f^*"))


def test_mul_examples(loop, toeplitz):
    L = LeavittAlgebra(loop)
    assert lpa_mul(L.parse("c"), L.parse("c^*")) == L.parse("v")
    assert lpa_mul(L.parse("c^*"), L.parse("c")) == L.parse("v")
    T = LeavittAlgebra(toeplitz)
    assert T.parse("f^*") * T.parse("u - c.c^*") == T.parse("f^*")


def test_graded_component(loop):
    L = LeavittAlgebra(loop)
    x = L.parse("c + v")
    assert graded_component(x, 0) == L.parse("v")
    assert graded_component(x, 1) == L.parse("c")
    assert not graded_component(L.parse("v"), 2)
    assert homogeneous_degrees(x) == {0, 1}


def test_graded_simple(sample_graphs):
    assert graded_simple(sample_graphs["loop"])
    assert not graded_simple(sample_graphs["toeplitz"])
    assert graded_simple(sample_graphs["cycle"])


@pytest.mark.parametrize("name", GRAPHS)
def test_confluence_and_measure(sample_graphs, name):
    g = sample_graphs[name]
    L, C = LeavittAlgebra(g), CohnAlgebra(g)
    rng = random.Random(17)
    pool = C.monomials_up_to(3)
    for _ in range(500):
        x = C.random_element(rng, max_terms=4, pool=pool)
        a = L.normal_form_randomized(dict(x.terms), random.Random(rng.random()), check_measure=True)
        b = L.normal_form_randomized(dict(x.terms), random.Random(rng.random()))
        assert a == b == L.reduce_terms(dict(x.terms))


def test_measure_violation_is_detected(loop, monkeypatch):
    L = LeavittAlgebra(loop)
    c = Path("v", ("c",))
    # a rewrite that reproduces its own redex never shrinks the measure
    monkeypatch.setattr(L, "rewrite", lambda m: {m: L.field.one, (Path("v"), Path("v")): L.field.one})
    with pytest.raises(RewriteMeasureError):
        L.normal_form_randomized({(c, c): 1}, random.Random(0), check_measure=True)


@pytest.mark.parametrize("name", GRAPHS)
def test_idempotent_and_compatible(sample_graphs, name):
    g = sample_graphs[name]
    L, C = LeavittAlgebra(g), CohnAlgebra(g)
    rng = random.Random(3)
    for _ in range(150):
        x, y = C.random_element(rng), C.random_element(rng)
        nx = lpa_normal_form(L, x)
        assert lpa_normal_form(L, nx) == nx
        lhs = lpa_normal_form(L, cohn_mul(x, y))
        rhs = lpa_normal_form(L, cohn_mul(CohnAlgebra(g).element(nx.terms), CohnAlgebra(g).element(lpa_normal_form(L, y).terms)))
        assert lhs == rhs


@pytest.mark.parametrize("name", GRAPHS)
def test_ck_multiples_vanish(sample_graphs, name):
    g = sample_graphs[name]
    L, C = LeavittAlgebra(g), CohnAlgebra(g)
    paths = [m[0] for m in C.monomials_up_to(3) if not m[1].edges]
    for v in g.vertices:
        if g.is_sink(v):
            continue
        ck = ck_prime(C, v)
        into = [p for p in paths if g.range_of(p) == v]
        for p, q in itertools.product(into, repeat=2):
            assert not lpa_normal_form(L, C.path(p) * ck * C.ghost_path(q))


def test_loop_basis_window(loop):
    L = LeavittAlgebra(loop)
    got = {str(L.element({m: 1})) for m in L.normal_basis_monomials(6) if -3 <= len(m[0].edges) - len(m[1].edges) <= 3
           and len(m[0].edges) + len(m[1].edges) <= 3}
    assert got == {"v", "c", "c.c", "c.c.c", "c^*", "c^*.c^*", "c^*.c^*.c^*"}
    # no mixed monomials survive at all
    assert all(not (m[0].edges and m[1].edges) for m in L.normal_basis_monomials(6))


@pytest.mark.parametrize("name", ["loop", "toeplitz", "three"])
def test_grading_additive(sample_graphs, name):
    L = LeavittAlgebra(sample_graphs[name])
    monos = L.normal_basis_monomials(2)
    for x, y in itertools.product(monos, repeat=2):
        a, b = L.element({x: 1}), L.element({y: 1})
        prod = a * b
        if prod:
            assert homogeneous_degrees(prod) == {next(iter(homogeneous_degrees(a))) + next(iter(homogeneous_degrees(b)))}


def test_mixed_graphs(loop, toeplitz):
    with pytest.raises(GraphError):
        lpa_mul(LeavittAlgebra(loop).parse("c"), LeavittAlgebra(toeplitz).parse("c"))
