"""The path semigroup S = {pq*} with zero and the Cohn algebra C(Gamma).

A monomial pq* is stored as the pair ``(p, q)`` of ``Path`` objects with
r(p) = r(q); the semigroup zero is ``None``. Algebra elements are finite maps
monomial -> nonzero scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import expr
from .graph import Graph, GraphError, Path
from .linalg import rank
from .scalars import QQ, Field


def sg_mul(x, y):
    """Product in S: (pq*)(rs*) = p r1 s* if r = q r1, p (s q1)* if q = r q1, else 0."""
    if x is None or y is None:
        return None
    p, q = x
    r, s = y
    if r.starts_with(q):
        return (Path(p.source, p.edges + r.edges[len(q.edges):]), s)
    if q.starts_with(r):
        return (p, Path(s.source, s.edges + q.edges[len(r.edges):]))
    return None


def sg_star(x):
    return None if x is None else (x[1], x[0])


def degree(m) -> int:
    return len(m[0].edges) - len(m[1].edges)


def format_monomial(m) -> str:
    p, q = m
    parts = list(p.edges) + [f"{e}^*" for e in reversed(q.edges)]
    return ".".join(parts) if parts else p.source


def format_terms(items) -> str:
    """Render ``(text, coefficient)`` pairs as a signed sum."""
    out = []
    for text, c in items:
        s = str(c)
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        body = text if mag == "1" else f"{mag}*{text}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) or "0"


class PathElement:
    """Immutable linear combination of monomials pq* in some path algebra."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra, terms: dict):
        self.algebra = algebra
        self.terms = terms
        self._hash = None

    def _check(self, other):
        if not isinstance(other, PathElement):
            return False
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise GraphError("elements of different algebras")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return self.algebra.element(terms)

    def __neg__(self):
        return self.algebra.element({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PathElement):
            self._check(other)
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
        if isinstance(other, PathElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def monomials(self):
        return list(self.terms)

    def coefficient(self, m):
        return self.terms.get(m, self.algebra.field.zero)

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"<{type(self.algebra).__name__} element {self}>"


class CohnElement(PathElement):
    __slots__ = ()


class PathAlgebra:
    """Shared machinery for C(Gamma) and its quotients; subclasses override
    ``reduce_terms`` to impose further relations."""

    element_class = PathElement

    def __init__(self, graph: Graph, field: Field = QQ):
        self.graph = graph
        self.field = field

    def __eq__(self, other):
        return type(self) is type(other) and self.graph == other.graph and self.field == other.field

    def __hash__(self):
        return hash((type(self).__name__, self.graph, self.field))

    # constructors

    def element(self, terms: dict):
        return self.element_class(self, terms)

    def from_terms(self, terms: dict, reduce: bool = True):
        terms = {m: c for m, c in terms.items() if c}
        return self.element(self.reduce_terms(terms) if reduce else terms)

    @property
    def zero(self):
        return self.element({})

    @cached_property
    def one(self):
        return self.element({(Path(v), Path(v)): self.field.one for v in self.graph.vertices})

    def monomial(self, p: Path, q: Path, c=None):
        if self.graph.range_of(p) != self.graph.range_of(q):
            raise GraphError(f"r({p}) != r({q}) in monomial")
        c = self.field.one if c is None else self.field(c)
        return self.from_terms({(p, q): c})

    def vertex(self, v):
        if not self.graph.has_vertex(v):
            raise GraphError(f"unknown vertex {v!r}")
        return self.monomial(Path(v), Path(v))

    def edge(self, e):
        ed = self.graph.edge(e)
        return self.monomial(Path(ed.source, (e,)), Path(ed.range))

    def ghost(self, e):
        ed = self.graph.edge(e)
        return self.monomial(Path(ed.range), Path(ed.source, (e,)))

    def path(self, p: Path):
        self.graph.check_path(p)
        return self.monomial(p, Path(self.graph.range_of(p)))

    def ghost_path(self, q: Path):
        self.graph.check_path(q)
        return self.monomial(Path(self.graph.range_of(q)), q)

    # arithmetic

    def scale(self, c, x):
        if not c:
            return self.zero
        return self.element({m: c * v for m, v in x.terms.items()})

    def raw_product(self, x, y) -> dict:
        terms: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                m = sg_mul(m1, m2)
                if m is None:
                    continue
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    del terms[m]
        return terms

    def mul(self, x, y):
        return self.from_terms(self.raw_product(x, y))

    def reduce_terms(self, terms: dict) -> dict:
        return terms

    def star(self, x):
        return self.from_terms({sg_star(m): c for m, c in x.terms.items()})

    # presentation

    def mono_key(self, m):
        p, q = m
        return (degree(m), len(p.edges), p.edges, q.edges,
                self.graph.vertex_index(p.source), self.graph.vertex_index(q.source))

    def format(self, x) -> str:
        items = sorted(x.terms.items(), key=lambda kv: self.mono_key(kv[0]))
        return format_terms((format_monomial(m), c) for m, c in items)

    def parse(self, text: str):
        return expr.evaluate(expr.parse(text), _PathEnv(self))

    def coordinates(self, x) -> dict:
        return dict(x.terms)

    # sampling

    def monomials_up_to(self, max_len: int) -> list:
        """All monomials pq* with len(p), len(q) <= max_len, canonically ordered."""
        by_range: dict = {}
        for v in self.graph.vertices:
            for p in self.graph.paths_from(v, max_len):
                by_range.setdefault(self.graph.range_of(p), []).append(p)
        monos = [(p, q) for ps in by_range.values() for p in ps for q in ps]
        return sorted(monos, key=self.mono_key)

    def random_element(self, rng, max_len: int = 2, max_terms: int = 3, pool=None):
        pool = pool or self.monomials_up_to(max_len)
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            terms[rng.choice(pool)] = self.field.random(rng, 3, nonzero=True)
        return self.from_terms(terms)


class CohnAlgebra(PathAlgebra):
    element_class = CohnElement


class _PathEnv:
    def __init__(self, alg: PathAlgebra):
        self.alg = alg

    def scalar(self, c):
        return self.alg.scale(self.alg.field(c), self.alg.one)

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


def star(x: PathElement) -> PathElement:
    return x.algebra.star(x)


def cohn_mul(x: PathElement, y: PathElement) -> PathElement:
    if x.algebra != y.algebra:
        raise GraphError("elements of different algebras")
    return x.algebra.mul(x, y)


def ck_prime(alg: PathAlgebra, v) -> PathElement:
    """CK(v)' = v - sum over s(f) = v of f f*."""
    g = alg.graph
    if g.is_sink(v):
        raise GraphError(f"no CK element at sink {v!r}")
    terms = {(Path(v), Path(v)): alg.field.one}
    for f in g.out_edges(v):
        ff = Path(v, (f.id,))
        terms[(ff, ff)] = terms.get((ff, ff), 0) - alg.field.one
    return alg.from_terms(terms, reduce=False)


@dataclass
class Lemma5Family:
    """Terms attached to one vertex v: p CK(v)' q* for (p, q) in ``pairs``,
    p' CK(v)' for p' in ``left``, CK(v)' q'* for q' in ``right``, and CK(v)'
    itself when ``plain``."""

    vertex: str
    pairs: list = field(default_factory=list)
    left: list = field(default_factory=list)
    right: list = field(default_factory=list)
    plain: bool = True


class Lemma5HypothesisError(ValueError):
    pass


def lemma5_elements(alg: PathAlgebra, families) -> list:
    g = alg.graph
    seen_vertices = set()
    out = []

    def need(p: Path, v, what):
        g.check_path(p)
        if not p.edges:
            raise Lemma5HypothesisError(f"{what} {p} must have length >= 1")
        if g.range_of(p) != v:
            raise Lemma5HypothesisError(f"{what} {p} does not end at {v}")

    for fam in families:
        v = fam.vertex
        if v in seen_vertices:
            raise Lemma5HypothesisError(f"vertex {v} listed twice")
        seen_vertices.add(v)
        if len(set(fam.pairs)) != len(fam.pairs):
            raise Lemma5HypothesisError(f"repeated pair at {v}")
        if len(set(fam.left)) != len(fam.left) or len(set(fam.right)) != len(fam.right):
            raise Lemma5HypothesisError(f"repeated path at {v}")
        ck = ck_prime(alg, v)
        for p, q in fam.pairs:
            need(p, v, "path")
            need(q, v, "path")
            out.append(alg.path(p) * ck * alg.ghost_path(q))
        for p in fam.left:
            need(p, v, "path")
            out.append(alg.path(p) * ck)
        for q in fam.right:
            need(q, v, "path")
            out.append(ck * alg.ghost_path(q))
        if fam.plain:
            out.append(ck)
    return out


def lemma5_verify(alg: PathAlgebra, families) -> bool:
    """True iff the listed elements of C(Gamma) are linearly independent,
    decided by exact rank of their expansion in the S-basis."""
    elems = lemma5_elements(alg, families)
    return rank([e.terms for e in elems], sort_key=alg.mono_key) == len(elems)


def cohn_relations_check(alg: PathAlgebra):
    """The defining relations of C(Gamma), exhaustively over generators."""
    from .report import Report

    g = alg.graph
    rep = Report(f"Cohn relations on {len(g.vertices)} vertices, {len(g.edges)} edges")
    V = {v: alg.vertex(v) for v in g.vertices}
    n = 0
    for v in g.vertices:
        for w in g.vertices:
            n += 1
            if v == w:
                rep.check(V[v] * V[v] == V[v], f"{v}^2 != {v}")
            else:
                rep.check(not (V[v] * V[w]), f"{v}.{w} != 0")
    for e in g.edges:
        x, xs = alg.edge(e.id), alg.ghost(e.id)
        s, r = V[e.source], V[e.range]
        n += 4
        rep.check(s * x == x, f"s({e.id}).{e.id} != {e.id}")
        rep.check(x * r == x, f"{e.id}.r({e.id}) != {e.id}")
        rep.check(xs * s == xs, f"{e.id}^*.s({e.id}) != {e.id}^*")
        rep.check(r * xs == xs, f"r({e.id}).{e.id}^* != {e.id}^*")
        for f in g.edges:
            n += 1
            prod = xs * alg.edge(f.id)
            if f.id == e.id:
                rep.check(prod == r, f"{e.id}^*.{e.id} != r({e.id})")
            else:
                rep.check(not prod, f"{e.id}^*.{f.id} != 0")
    rep.note(f"{n} relation instances")
    return rep
