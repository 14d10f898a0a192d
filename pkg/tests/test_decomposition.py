import pytest

from lpa_wreath.graph import GraphError, hsat_closure, parse_graph
from lpa_wreath.leavitt import LeavittAlgebra
from lpa_wreath.wreath import X0, balloon_iso_check, prop2_decompose, prop2_phi, prop2_verify
from lpa_wreath.wreath.decomposition import Prop2Map, _prop2_map


@pytest.fixture
def T(toeplitz):
    return LeavittAlgebra(toeplitz)


def test_decompose_examples(T):
    F = Prop2Map(T.graph, {"v"})
    parts = prop2_decompose(T.parse("f"), {"v"})
    assert not parts.a and not parts.c and not parts.d
    [(p, b)] = parts.b.items()
    assert str(p) == "f" and b == F.LW.parse("v")
    parts = prop2_decompose(T.parse("u"), {"v"})
    assert parts.a_prime == T.parse("u") and not parts.b
    parts = prop2_decompose(T.parse("f.f^*"), {"v"})
    [((p, q), a)] = parts.a.items()
    assert str(p) == str(q) == "f" and a == F.LW.parse("v")
    parts = prop2_decompose(T.parse("v + f^*"), {"v"})
    assert parts.d == F.LW.parse("v")
    [(q, c)] = parts.c.items()
    assert str(q) == "f"


def test_phi_examples(T):
    F = _prop2_map(T.graph, frozenset({"v"}), T.field)
    B = F.B
    f = next(x for x in [y for y in B.eg.bridges] if x.id == "f")
    assert str(prop2_phi(T.parse("f"), {"v"})) == "[v @ f, 0]"
    assert str(prop2_phi(T.parse("u"), {"v"})) == "u"
    assert str(prop2_phi(T.parse("f.f^*"), {"v"})) == "[v @ f, f]"
    assert prop2_phi(T.parse("v"), {"v"}) == B.unit(F.LW.parse("v"), X0, X0)
    # c c* = u - f f* in L(Gamma); its image is reduced in the wreath
    assert prop2_phi(T.parse("c.c^*"), {"v"}) == B.parse("c.c^*")
    assert f.idem == "v"


def test_preconditions(T, line):
    with pytest.raises(GraphError):
        Prop2Map(line, {"v"})
    with pytest.raises(GraphError):
        Prop2Map(T.graph, set())


def test_prop2_toeplitz(toeplitz):
    rep = prop2_verify(toeplitz, {"v"}, maxlen=3, samples=100, seed=7)
    assert rep, str(rep)


def test_prop2_three(three):
    w = hsat_closure(three, {"w"})
    assert w == {"v", "w"}
    rep = prop2_verify(three, w, maxlen=3, samples=100, seed=1)
    assert rep, str(rep)
    rep = prop2_verify(three, hsat_closure(three, {"v"}), maxlen=3, samples=50)
    assert rep, str(rep)


def test_prop2_line_whole(line):
    rep = prop2_verify(line, {"u", "v"}, maxlen=2, samples=30)
    assert rep, str(rep)


def test_balloon(toeplitz, cycle, loop):
    rep = balloon_iso_check(toeplitz, "u", maxlen=3, samples=50)
    assert rep, str(rep)
    with pytest.raises(GraphError, match="balloon"):
        balloon_iso_check(cycle, "u")
    with pytest.raises(GraphError):
        balloon_iso_check(loop, "v")


def test_balloon_two_exits():
    g = parse_graph("vertex u\nvertex v\nvertex w\nedge c u u\nedge f u v\nedge g u w\n")
    rep = balloon_iso_check(g, "u", maxlen=2, samples=40)
    assert rep, str(rep)
