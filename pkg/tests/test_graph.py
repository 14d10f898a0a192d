import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpa_wreath.graph import (
    Graph,
    GraphError,
    Path,
    enumerate_hsat,
    enumerate_paths,
    hereditary_saturated_check,
    hsat_closure,
    is_balloon,
    parse_graph,
    quotient,
    restrict,
)


def test_parse_loop(loop):
    assert loop.vertices == ("v",)
    assert [e.id for e in loop.edges] == ["c"]
    assert loop.edge("c").source == loop.edge("c").range == "v"


def test_parse_toeplitz(toeplitz):
    assert toeplitz.vertices == ("u", "v")
    assert toeplitz.is_sink("v") and not toeplitz.is_sink("u")


def test_parse_errors():
    with pytest.raises(GraphError, match="unknown endpoint"):
        parse_graph("edge c v v")
    with pytest.raises(GraphError, match="duplicate"):
        parse_graph("vertex v\nvertex v")
    with pytest.raises(GraphError, match="line 2"):
        parse_graph("vertex v\nedge c v\n")


def test_comments_and_blank_lines():
    g = parse_graph("# a loop\n\nvertex v  # the vertex\nedge c v v\n")
    assert len(g.edges) == 1


def test_paths(loop, toeplitz):
    assert [str(p) for p in enumerate_paths(loop, 2)] == ["v", "c", "c.c"]
    assert [str(p) for p in enumerate_paths(toeplitz, 1)] == ["u", "v", "c", "f"]
    assert enumerate_paths(toeplitz, 0) == [Path("u"), Path("v")]
    with pytest.raises(GraphError):
        toeplitz.path("f", "c")


def test_hereditary_saturated(toeplitz, line, cycle):
    assert hereditary_saturated_check(toeplitz, {"v"}) == (True, True)
    assert hereditary_saturated_check(line, {"v"}) == (True, False)
    assert hereditary_saturated_check(cycle, set()) == (True, True)
    with pytest.raises(GraphError):
        hereditary_saturated_check(cycle, {"x"})


def test_closure(toeplitz, line):
    assert hsat_closure(line, {"v"}) == {"u", "v"}
    assert hsat_closure(toeplitz, {"v"}) == {"v"}
    assert hsat_closure(toeplitz, set()) == set()


def test_enumerate(loop, toeplitz, cycle):
    assert enumerate_hsat(loop) == [frozenset(), frozenset({"v"})]
    assert enumerate_hsat(toeplitz) == [frozenset(), frozenset({"v"}), frozenset({"u", "v"})]
    assert enumerate_hsat(cycle) == [frozenset(), frozenset({"u", "v"})]


def test_enumerate_bound():
    g = Graph([f"v{i}" for i in range(5)], [])
    with pytest.raises(GraphError):
        enumerate_hsat(g, bound=4)


def test_restrict_quotient(toeplitz, line):
    r = restrict(toeplitz, {"v"})
    assert r.vertices == ("v",) and r.edges == ()
    q = quotient(toeplitz, {"v"})
    assert q.vertices == ("u",) and [e.id for e in q.edges] == ["c"]
    assert quotient(toeplitz, set()) == toeplitz
    assert restrict(toeplitz, {"u", "v"}) == toeplitz
    with pytest.raises(GraphError):
        quotient(line, {"v"})


def test_balloon(toeplitz, loop, cycle):
    assert is_balloon(toeplitz, "u", {"v"})
    assert not is_balloon(loop, "v", set())
    assert not is_balloon(cycle, "u", {"v"})


def random_graph(rng, n=4, m=6):
    vs = [f"v{i}" for i in range(n)]
    es = [(f"e{k}", rng.choice(vs), rng.choice(vs)) for k in range(rng.randint(0, m))]
    return Graph(vs, es)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_closure_idempotent_and_monotone(seed):
    rng = random.Random(seed)
    g = random_graph(rng)
    w = {v for v in g.vertices if rng.random() < 0.3}
    w2 = w | {v for v in g.vertices if rng.random() < 0.3}
    c = hsat_closure(g, w)
    assert w <= c
    assert hsat_closure(g, c) == c
    assert c <= hsat_closure(g, w2)
    assert hereditary_saturated_check(g, c) == (True, True)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_enumeration_is_exact(seed):
    g = random_graph(random.Random(seed))
    found = set(enumerate_hsat(g))
    for r in range(len(g.vertices) + 1):
        for w in itertools.combinations(g.vertices, r):
            ok = hereditary_saturated_check(g, w) == (True, True)
            assert ok == (frozenset(w) in found)
