"""The wreath product B = A wr L(Gamma).

Elements are stored split as (Leavitt part in normal form, matrix part over
bridge-path indices). Matrix indices are the bridge paths p.e (a path p of
Gamma followed by a bridge edge e into the idempotent family) together with
the zero point X0, whose range is the unit of A.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .. import expr
from ..coefficients import CoefficientAlgebra, DiagonalAlgebra, ScalarAlgebra
from ..cohn import PathAlgebra, format_terms, sg_mul, sg_star
from ..graph import Graph, GraphError, Path
from ..leavitt import LeavittAlgebra


class WreathError(ValueError):
    pass


class CornerError(WreathError):
    pass


@dataclass(frozen=True)
class Bridge:
    id: str
    source: str
    idem: str


class _ZeroPoint:
    __slots__ = ()

    def __repr__(self):
        return "X0"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return "X0"


X0 = _ZeroPoint()


class BridgePath(NamedTuple):
    path: Path
    bridge: str

    def __str__(self):
        return ".".join(self.path.edges + (self.bridge,))

    @property
    def length(self) -> int:
        return len(self.path.edges) + 1


def bp_length(x) -> int:
    return 0 if x is X0 else x.length


class ExtendedGraph:
    """Gamma extended by bridge edges E(V, E) into a family of idempotents of A."""

    def __init__(self, graph: Graph, coeff: CoefficientAlgebra, bridges):
        self.graph = graph
        self.coeff = coeff
        bridges = [b if isinstance(b, Bridge) else Bridge(*b) for b in bridges]
        seen = set(graph.vertices) | {e.id for e in graph.edges}
        for b in bridges:
            if b.id in seen:
                raise WreathError(f"duplicate identifier {b.id!r} for bridge")
            seen.add(b.id)
            if not graph.has_vertex(b.source):
                raise WreathError(f"bridge {b.id!r} starts at unknown vertex {b.source!r}")
            if graph.is_sink(b.source):
                raise WreathError(f"bridge {b.id!r} starts at sink {b.source!r}")
            if b.idem not in coeff.idempotents:
                raise WreathError(f"bridge {b.id!r} ends at unknown idempotent {b.idem!r}")
        self.bridges = tuple(bridges)
        self._by_id = {b.id: b for b in bridges}
        self._at = {v: tuple(sorted((b for b in bridges if b.source == v), key=lambda b: b.id)) for v in graph.vertices}

    def __eq__(self, other):
        return (isinstance(other, ExtendedGraph) and self.graph == other.graph
                and self.coeff is other.coeff and self.bridges == other.bridges)

    def __hash__(self):
        return hash((self.graph, id(self.coeff), self.bridges))

    @property
    def field(self):
        return self.coeff.field

    def bridge(self, bid) -> Bridge:
        try:
            return self._by_id[bid]
        except KeyError:
            raise WreathError(f"unknown bridge {bid!r}") from None

    def bridges_at(self, v) -> tuple:
        return self._at[v]

    def has_bridge(self, bid) -> bool:
        return bid in self._by_id

    def range_of(self, x):
        """r(x) as an element of A; r(X0) = 1."""
        if x is X0:
            return self.coeff.one
        return self.coeff.idempotents[self._by_id[x.bridge].idem]

    def bridge_path(self, edges, bridge: str) -> BridgePath:
        b = self.bridge(bridge)
        edges = tuple(edges)
        p = self.graph.path(*edges) if edges else Path(b.source)
        if self.graph.range_of(p) != b.source:
            raise WreathError(f"bridge {bridge!r} does not start where {p} ends")
        return BridgePath(p, bridge)

    def bp_key(self, x):
        if x is X0:
            return (0, (), -1)
        return (x.length, x.path.edges + (x.bridge,), self.graph.vertex_index(x.path.source))


def extend_graph(g: Graph, A: CoefficientAlgebra, bridges) -> ExtendedGraph:
    return ExtendedGraph(g, A, bridges)


def parse_extension(text: str, g: Graph, A: CoefficientAlgebra | None = None, field=None) -> ExtendedGraph:
    """Extension file: ``idem <name>`` and ``bridge <edge-id> <vertex-id> <idem-name>``.

    Without an explicit A the coefficient algebra is F^k on the declared
    idempotents (F itself when the single idempotent is named ``1``).
    """
    idems, bridges = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "idem" and len(parts) == 2:
            if parts[1] in idems:
                raise WreathError(f"line {lineno}: duplicate idempotent {parts[1]!r}")
            idems.append(parts[1])
        elif parts[0] == "bridge" and len(parts) == 4:
            bridges.append((lineno, Bridge(*parts[1:])))
        else:
            raise WreathError(f"line {lineno}: cannot parse {line!r}")
    if A is None:
        kw = {"field": field} if field is not None else {}
        A = ScalarAlgebra(**kw) if idems == ["1"] else DiagonalAlgebra(idems, **kw)
    else:
        for n in idems:
            if n not in A.idempotents:
                raise WreathError(f"idempotent {n!r} is not designated in {A!r}")
    for lineno, b in bridges:
        if b.idem not in idems:
            raise WreathError(f"line {lineno}: unknown idempotent {b.idem!r}")
    try:
        return ExtendedGraph(g, A, [b for _, b in bridges])
    except WreathError as exc:
        bad = next((ln for ln, b in bridges if b.id in str(exc)), None)
        raise WreathError(f"line {bad}: {exc}" if bad else str(exc)) from None


def act(s, x, side: str = "left"):
    """Action of a monomial s = r q* of C(Gamma) on a bridge path.

    Left: s.x evaluated in C(Gamma~): r p' e when x = q p' e, else X0.
    Right: x.s = s* x.
    """
    if side == "right":
        s = sg_star(s)
    elif side != "left":
        raise ValueError("side must be 'left' or 'right'")
    if s is None or x is X0:
        return X0
    r, q = s
    pi = x.path
    if not pi.starts_with(q):
        return X0
    return BridgePath(Path(r.source, r.edges + pi.edges[len(q.edges):]), x.bridge)


def enumerate_bridge_paths(eg: ExtendedGraph, max_len: int) -> list:
    """X0 followed by all p.e with len(p) + 1 <= max_len, deterministically ordered."""
    if max_len < 1:
        raise WreathError("max_len must be >= 1")
    out = [X0]
    g = eg.graph
    for v in g.vertices:
        for p in g.paths_from(v, max_len - 1):
            for b in eg.bridges_at(g.range_of(p)):
                out.append(BridgePath(p, b.id))
    return [X0] + sorted(out[1:], key=eg.bp_key)


class WreathElement:
    __slots__ = ("algebra", "L", "M", "_hash")

    def __init__(self, algebra, L: dict, M: dict):
        self.algebra = algebra
        self.L = L
        self.M = M
        self._hash = None

    def _same(self, other):
        if not isinstance(other, WreathElement):
            return False
        if other.algebra is not self.algebra:
            raise WreathError("elements of different wreath algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return self.algebra.add(self, other)

    def __neg__(self):
        return self.algebra.scale(-self.algebra.field.one, self)

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self.algebra.add(self, -other)

    def __mul__(self, other):
        if isinstance(other, WreathElement):
            self._same(other)
            return self.algebra.mul(self, other)
        try:
            c = self.algebra.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.algebra.scale(c, self)

    def __rmul__(self, c):
        try:
            c = self.algebra.field(c)
        except (TypeError, ValueError):
            return NotImplemented
        return self.algebra.scale(c, self)

    def __eq__(self, other):
        if isinstance(other, WreathElement):
            return self.algebra is other.algebra and self.L == other.L and self.M == other.M
        if other == 0:
            return not self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.L.items()), frozenset(self.M.items())))
        return self._hash

    def __bool__(self):
        return bool(self.L) or bool(self.M)

    @property
    def leavitt_part(self):
        return self.algebra.L.element(dict(self.L))

    def matrix_part(self):
        return self.algebra.element({}, dict(self.M))

    def is_matrix(self) -> bool:
        return not self.L

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"<WreathElement {self}>"


def _acc(d: dict, key, val, is_zero):
    if key in d:
        val = d[key] + val
    if is_zero(val):
        d.pop(key, None)
    else:
        d[key] = val


class WreathAlgebra:
    """B = (C(Gamma) + I)/J for an extended graph."""

    def __init__(self, eg: ExtendedGraph):
        self.eg = eg
        self.graph = eg.graph
        self.coeff = eg.coeff
        self.field = eg.coeff.field
        self.L = LeavittAlgebra(eg.graph, self.field)
        self._nf_cache: dict = {}

    # construction

    def element(self, L=None, M=None, normalize: bool = True, check: bool = True) -> WreathElement:
        L = {m: c for m, c in (L or {}).items() if c}
        M = {k: a for k, a in (M or {}).items() if not self.coeff.is_zero(a)}
        if check:
            self.check_corners(M)
        x = WreathElement(self, L, M)
        return self.normal_form(x) if normalize else x

    def raw(self, L=None, M=None) -> WreathElement:
        """Element of C(Gamma) + I, not reduced modulo J."""
        return self.element(L, M, normalize=False)

    @property
    def zero(self):
        return WreathElement(self, {}, {})

    @cached_property
    def one(self):
        return self.element(dict(self.L.one.terms), {(X0, X0): self.coeff.one})

    def vertex(self, v):
        return self.element(self.L.vertex(v).terms)

    def edge(self, e):
        return self.element(self.L.edge(e).terms)

    def ghost(self, e):
        return self.element(self.L.ghost(e).terms)

    def from_leavitt(self, x):
        return self.element(dict(x.terms))

    def unit(self, a, p, q, check: bool = True) -> WreathElement:
        """The matrix unit a_{p,q}."""
        return self.element({}, {(p, q): a}, normalize=False, check=check)

    def check_corners(self, M: dict):
        r = self.eg.range_of
        for (p, q), a in M.items():
            if r(p) * a * r(q) != a:
                raise CornerError(f"entry {self.coeff.format(a)} at ({p}, {q}) is outside r(p) A r(q)")

    # linear structure

    def add(self, x, y):
        L = dict(x.L)
        for m, c in y.L.items():
            v = L.get(m, 0) + c
            if v:
                L[m] = v
            else:
                L.pop(m, None)
        M = dict(x.M)
        for k, a in y.M.items():
            _acc(M, k, a, self.coeff.is_zero)
        return WreathElement(self, L, M)

    def scale(self, c, x):
        if not c:
            return self.zero
        return WreathElement(self, {m: c * v for m, v in x.L.items()}, {k: c * a for k, a in x.M.items()})

    # normal form

    def monomial_normal_form(self, m):
        """(Leavitt terms, matrix terms) of the wreath normal form of pq*."""
        hit = self._nf_cache.get(m)
        if hit is not None:
            return hit
        red = self.L.split_redex(m)
        if red is None:
            res = ({m: self.field.one}, {})
        else:
            p, q, v = red
            Lt: dict = {}
            Mt: dict = {}
            for m2, c2 in self.L.rewrite(m).items():
                L3, M3 = self.monomial_normal_form(m2)
                for m3, c3 in L3.items():
                    val = Lt.get(m3, 0) + c2 * c3
                    if val:
                        Lt[m3] = val
                    else:
                        Lt.pop(m3, None)
                for k, a in M3.items():
                    _acc(Mt, k, c2 * a, self.coeff.is_zero)
            for b in self.eg.bridges_at(v):
                key = (BridgePath(p, b.id), BridgePath(q, b.id))
                _acc(Mt, key, -self.coeff.idempotents[b.idem], self.coeff.is_zero)
            res = (Lt, Mt)
        self._nf_cache[m] = res
        return res

    def normal_form(self, x) -> WreathElement:
        L: dict = {}
        M = dict(x.M)
        for m, c in x.L.items():
            L2, M2 = self.monomial_normal_form(m)
            for m2, c2 in L2.items():
                v = L.get(m2, 0) + c * c2
                if v:
                    L[m2] = v
                else:
                    L.pop(m2, None)
            for k, a in M2.items():
                _acc(M, k, c * a, self.coeff.is_zero)
        return WreathElement(self, L, M)

    def normal_form_randomized(self, x, rng) -> WreathElement:
        """Same normal form reached by rewriting a randomly chosen redex at each step."""
        L = dict(x.L)
        M = dict(x.M)
        split = self.L.split_redex
        while True:
            redexes = sorted((m for m in L if split(m)), key=self.L.mono_key)
            if not redexes:
                return WreathElement(self, L, M)
            m = rng.choice(redexes)
            c = L.pop(m)
            p, q, v = split(m)
            for m2, c2 in self.L.rewrite(m).items():
                val = L.get(m2, 0) + c * c2
                if val:
                    L[m2] = val
                else:
                    L.pop(m2, None)
            for b in self.eg.bridges_at(v):
                key = (BridgePath(p, b.id), BridgePath(q, b.id))
                _acc(M, key, -c * self.coeff.idempotents[b.idem], self.coeff.is_zero)

    # products

    def mul_raw(self, x, y) -> WreathElement:
        """Product in C(Gamma) + I (no reduction modulo J)."""
        A = self.coeff
        L: dict = {}
        M: dict = {}
        for m1, c1 in x.L.items():
            for m2, c2 in y.L.items():
                m = sg_mul(m1, m2)
                if m is not None:
                    v = L.get(m, 0) + c1 * c2
                    if v:
                        L[m] = v
                    else:
                        L.pop(m, None)
            for (p, q), a in y.M.items():
                sp = act(m1, p, "left")
                if sp is not X0:
                    _acc(M, (sp, q), c1 * a, A.is_zero)
        for (p, q), a in x.M.items():
            for m2, c2 in y.L.items():
                qs = act(m2, q, "right")
                if qs is not X0:
                    _acc(M, (p, qs), c2 * a, A.is_zero)
            for (r, t), b in y.M.items():
                if q == r:
                    _acc(M, (p, t), a * b, A.is_zero)
        return WreathElement(self, L, M)

    def mul(self, x, y) -> WreathElement:
        return self.normal_form(self.mul_raw(x, y))

    def power(self, x, n: int):
        out = self.one
        for _ in range(n):
            out = out * x
        return out

    # presentation and parsing

    def format(self, x) -> str:
        parts = []
        if x.L:
            parts.append(self.L.format(self.L.element(x.L)))
        for (p, q), a in sorted(x.M.items(), key=lambda kv: (self.eg.bp_key(kv[0][0]), self.eg.bp_key(kv[0][1]))):
            parts.append(f"[{self.coeff.format(a)} @ {p}, {q}]")
        return " + ".join(parts) if parts else "0"

    def parse(self, text: str) -> WreathElement:
        return expr.evaluate(expr.parse(text), _WreathEnv(self))

    def index_from_names(self, names):
        if names is None:
            return X0
        *edges, bridge = names
        if not self.eg.has_bridge(bridge):
            raise expr.ExpressionError(f"matrix index must end in a bridge edge, got {bridge!r}")
        try:
            return self.eg.bridge_path(edges, bridge)
        except GraphError as exc:
            raise expr.ExpressionError(str(exc)) from None

    def coordinates(self, x) -> dict:
        out = {}
        for m, c in x.L.items():
            out[(0, self.L.mono_key(m))] = c
        for (p, q), a in x.M.items():
            for k, v in self.coeff.coordinates(a).items():
                out[(1, self.eg.bp_key(p), self.eg.bp_key(q), k)] = v
        return out

    # sampling

    def corner_element(self, rng, p, q, tries: int = 8):
        """Random nonzero element of r(p) A r(q), or None if the corner looks empty."""
        r = self.eg.range_of
        for _ in range(tries):
            a = r(p) * self.coeff.random_element(rng) * r(q)
            if not self.coeff.is_zero(a):
                return a
        return None

    def random_element(self, rng, max_len: int = 2, max_index: int = 3, max_terms: int = 2,
                       leavitt_pool=None, index_pool=None) -> WreathElement:
        lpool = leavitt_pool or self._pool("L", max_len)
        ipool = index_pool or self._pool("P", max_index)
        L, M = {}, {}
        for _ in range(rng.randint(0, max_terms)):
            m = rng.choice(lpool)
            L[m] = L.get(m, 0) + self.field.random(rng, 3, nonzero=True)
        for _ in range(rng.randint(0 if L else 1, max_terms)):
            p, q = rng.choice(ipool), rng.choice(ipool)
            a = self.corner_element(rng, p, q)
            if a is not None:
                _acc(M, (p, q), a, self.coeff.is_zero)
        return self.element(L, M)

    def _pool(self, kind, n):
        key = ("_pool", kind, n)
        cache = self.__dict__.setdefault("_pools", {})
        if key not in cache:
            cache[key] = self.L.normal_basis_monomials(n) if kind == "L" else enumerate_bridge_paths(self.eg, n)
        return cache[key]


class _WreathEnv:
    def __init__(self, alg: WreathAlgebra):
        self.alg = alg

    def scalar(self, c):
        return self.alg.field(c) * self.alg.one

    def scale(self, c, x):
        return self.alg.field(c) * x

    def ident(self, name):
        g = self.alg.graph
        if g.has_vertex(name):
            return self.alg.vertex(name)
        if g.has_edge(name):
            return self.alg.edge(name)
        raise expr.ExpressionError(f"unknown vertex or edge {name!r}")

    def star(self, name):
        g = self.alg.graph
        if g.has_vertex(name):
            return self.alg.vertex(name)
        if g.has_edge(name):
            return self.alg.ghost(name)
        raise expr.ExpressionError(f"unknown vertex or edge {name!r}")

    def unit(self, coeff_node, p, q):
        a = self.alg.coeff.parse(coeff_node)
        return self.alg.unit(a, self.alg.index_from_names(p), self.alg.index_from_names(q))


def ck_full(alg: WreathAlgebra, v) -> WreathElement:
    """CK(v) = CK(v)' - CK(v)'' as a raw element of C(Gamma) + I."""
    g = alg.graph
    if g.is_sink(v):
        raise GraphError(f"no CK element at sink {v!r}")
    one = alg.field.one
    L = {(Path(v), Path(v)): one}
    for f in g.out_edges(v):
        ff = Path(v, (f.id,))
        L[(ff, ff)] = -one
    M = {}
    for b in alg.eg.bridges_at(v):
        e = BridgePath(Path(v), b.id)
        M[(e, e)] = -alg.coeff.idempotents[b.idem]
    return alg.raw(L, M)


def wreath_normal_form(alg: WreathAlgebra, x: WreathElement) -> WreathElement:
    alg.check_corners(x.M)
    return alg.normal_form(x)


def wreath_mul(x: WreathElement, y: WreathElement) -> WreathElement:
    if x.algebra is not y.algebra:
        raise WreathError("elements of different wreath algebras")
    return x.algebra.mul(x, y)


def loop_extension(coeff: CoefficientAlgebra, idem: str = "1") -> ExtendedGraph:
    """Single loop c at v with one bridge e from v to the idempotent ``idem``."""
    g = Graph(["v"], [("c", "v", "v")])
    return ExtendedGraph(g, coeff, [Bridge("e", "v", idem)])


def bridge_path_pool(eg: ExtendedGraph, max_len: int) -> list:
    return enumerate_bridge_paths(eg, max_len)


def sample_rng(seed: int) -> random.Random:
    return random.Random(seed)
