"""L(Gamma) as a wreath product over a hereditary saturated subset W.

With A = L(Gamma(W)) (idempotents: the vertices of W) and base graph Gamma/W
(bridges: the edges from outside W into W), every Leavitt monomial p1 p2*
ending in W splits at the first edge entering W, and the pieces become a
matrix unit of A wr L(Gamma/W).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import NamedTuple

from ..coefficients import CoefficientAlgebra
from ..cohn import _PathEnv
from ..graph import (
    Graph,
    GraphError,
    Path,
    hereditary_saturated_check,
    is_balloon,
    quotient,
    restrict,
)
from ..leavitt import LeavittAlgebra
from ..linalg import SparseBasis
from ..report import Report
from ..scalars import QQ
from .core import X0, Bridge, BridgePath, ExtendedGraph, WreathAlgebra, enumerate_bridge_paths


class LeavittCoefficients(CoefficientAlgebra):
    """L(Delta) used as a coefficient algebra, with its vertices as idempotents."""

    def __init__(self, L: LeavittAlgebra):
        self.L = L
        self.field = L.field
        self.idempotents = {v: L.vertex(v) for v in L.graph.vertices}

    @property
    def zero(self):
        return self.L.zero

    @property
    def one(self):
        return self.L.one

    def coordinates(self, a):
        return {self.L.mono_key(m): c for m, c in a.terms.items()}

    def random_element(self, rng):
        return self.L.random_element(rng, max_len=2, max_terms=2)

    def format(self, a):
        return self.L.format(a)

    def _env(self):
        return _PathEnv(self.L)

    def __repr__(self):
        return f"L({self.L.graph})"


class Prop2Parts(NamedTuple):
    a_prime: object  # Leavitt element of Gamma supported outside W
    a: dict  # (p, q) -> element of L(Gamma(W))
    b: dict  # p -> element, column X0
    c: dict  # q -> element, row X0
    d: object


class Prop2Map:
    def __init__(self, g: Graph, w, field=QQ):
        w = frozenset(w)
        h, s = hereditary_saturated_check(g, w)
        if not (h and s):
            raise GraphError(f"{sorted(w)} is not hereditary and saturated (hereditary={h}, saturated={s})")
        if not w:
            raise GraphError("W must be nonempty")
        self.graph = g
        self.W = w
        self.LG = LeavittAlgebra(g, field)
        self.LW = LeavittAlgebra(restrict(g, w), field)
        self.A = LeavittCoefficients(self.LW)
        self.Q = quotient(g, w)
        bridges = [Bridge(e.id, e.source, e.range) for e in g.edges if e.source not in w and e.range in w]
        self.eg = ExtendedGraph(self.Q, self.A, bridges)
        self.B = WreathAlgebra(self.eg)

    def split(self, p: Path):
        """(index, inner path) for a path ending in W; index is X0 if p starts in W."""
        if p.source in self.W:
            return X0, p
        for i, e in enumerate(p.edges):
            r = self.graph.edge(e).range
            if r in self.W:
                rest = p.edges[i + 1:]
                if any(self.graph.edge(f).range not in self.W for f in rest):
                    raise GraphError(f"path {p} leaves W after entering it")
                return BridgePath(Path(p.source, p.edges[:i]), e), Path(r, rest)
        return None

    def decompose(self, x) -> Prop2Parts:
        x = self.LG.from_terms(dict(x.terms))
        outside = {}
        a, b, c = {}, {}, {}
        d = self.LW.zero
        for (p1, p2), coef in x.terms.items():
            if self.graph.range_of(p1) not in self.W:
                outside[(p1, p2)] = coef
                continue
            (P, a1), (Q, b1) = self.split(p1), self.split(p2)
            inner = self.LW.from_terms({(a1, b1): coef})
            if P is X0 and Q is X0:
                d = d + inner
            elif Q is X0:
                b[P] = b[P] + inner if P in b else inner
            elif P is X0:
                c[Q] = c[Q] + inner if Q in c else inner
            else:
                a[(P, Q)] = a[(P, Q)] + inner if (P, Q) in a else inner
        drop = lambda dd: {k: v for k, v in dd.items() if v}
        return Prop2Parts(self.LG.element(outside), drop(a), drop(b), drop(c), d)

    def phi(self, x):
        parts = self.decompose(x)
        M = {k: v for k, v in parts.a.items()}
        M.update({(p, X0): v for p, v in parts.b.items()})
        M.update({(X0, q): v for q, v in parts.c.items()})
        if parts.d:
            M[(X0, X0)] = parts.d
        # monomials avoiding W live in C(Gamma/W); reduce them in the wreath
        return self.B.element(dict(parts.a_prime.terms), M)

    def preimage(self, target_mono, P, Q):
        """Monomial of L(Gamma) mapping onto (a b*)_{P,Q}."""
        a, b = target_mono

        def glue(X, inner):
            if X is X0:
                return inner
            return Path(X.path.source, X.path.edges + (X.bridge,) + inner.edges)

        return self.LG.from_terms({(glue(P, a), glue(Q, b)): self.LG.field.one})


@lru_cache(maxsize=32)
def _prop2_map(g: Graph, w: frozenset, field) -> Prop2Map:
    return Prop2Map(g, w, field)


def prop2_decompose(x, w) -> Prop2Parts:
    alg = x.algebra
    return _prop2_map(alg.graph, frozenset(w), alg.field).decompose(x)


def prop2_phi(x, w):
    alg = x.algebra
    return _prop2_map(alg.graph, frozenset(w), alg.field).phi(x)


def prop2_verify(g: Graph, w, maxlen: int = 4, samples: int = 300, seed: int = 0, field=QQ) -> Report:
    F = _prop2_map(g, frozenset(w), field)
    LG, B = F.LG, F.B
    rep = Report(f"L(Gamma) = L(Gamma(W)) wr L(Gamma/W) for W = {{{', '.join(v for v in g.vertices if v in F.W)}}}")
    rng = random.Random(seed)
    pool = LG.normal_basis_monomials(maxlen)
    small = LG.normal_basis_monomials(min(maxlen, 2))

    rep.check(F.phi(LG.one) == B.one, "phi(1) != 1")

    def rand(p):
        return LG.random_element(rng, max_terms=3, pool=p)

    for i in range(samples):
        x, y = rand(pool), rand(pool)
        al, be = LG.field.random(rng, 4), LG.field.random(rng, 4)
        lhs = F.phi(al * x + be * y)
        rhs = al * F.phi(x) + be * F.phi(y)
        rep.check(lhs == rhs, f"linearity fails on sample {i}: {lhs} != {rhs}")
    for i in range(samples):
        x = rand(pool if i % 2 else small)
        y = rand(small if i % 2 else pool)
        lhs, rhs = F.phi(x * y), F.phi(x) * F.phi(y)
        rep.check(lhs == rhs, f"phi(xy) != phi(x)phi(y) for x = {x}, y = {y}: {lhs} vs {rhs}")
    rep.note(f"linearity and multiplicativity on {samples} random pairs each")

    basis = SparseBasis()
    for m in pool:
        basis.add(B.coordinates(F.phi(LG.element({m: LG.field.one}))))
    rep.check(basis.rank == len(pool), f"rank {basis.rank} < {len(pool)}: phi not injective")
    rep.note(f"injective on {len(pool)} normal monomials with paths of length <= {maxlen}")

    hits = 0
    for m in LeavittAlgebra(F.Q, LG.field).normal_basis_monomials(maxlen):
        target = B.element({m: B.field.one})
        got = F.phi(LG.from_terms({m: LG.field.one}))
        hits += 1
        rep.check(got == target, f"Leavitt monomial {target} not hit: phi gives {got}")
    idx = enumerate_bridge_paths(F.eg, maxlen)
    inner = F.LW.normal_basis_monomials(maxlen)
    r = F.eg.range_of
    for P in idx:
        for Q in idx:
            for mono in inner:
                a = F.LW.element({mono: F.LW.field.one})
                if r(P) * a * r(Q) != a:
                    continue
                target = B.unit(a, P, Q)
                got = F.phi(F.preimage(mono, P, Q))
                hits += 1
                rep.check(got == target, f"{target} not hit: phi gives {got}")
    rep.note(f"surjective onto {hits} wreath basis elements of bounded size")
    return rep


def balloon_iso_check(g: Graph, v, maxlen: int = 4, samples: int = 300, seed: int = 0, field=QQ) -> Report:
    w = frozenset(g.vertices) - {v}
    if not is_balloon(g, v, w):
        raise GraphError(f"{v!r} is not a balloon vertex")
    h, s = hereditary_saturated_check(g, w)
    if not (h and s):
        raise GraphError(f"complement of {v!r} is not hereditary and saturated")
    rep = Report(f"balloon at {v}: L(Gamma') = L(Gamma) wr L(loop)")
    Q = quotient(g, w)
    loop = len(Q.vertices) == 1 and len(Q.edges) == 1 and Q.edges[0].source == Q.edges[0].range == v
    rep.check(loop, f"quotient graph is not a single loop: {Q}")
    rep.merge(prop2_verify(g, w, maxlen, samples, seed, field))
    return rep
