"""A semigroup with zero acting on both sides of a pointed set X, and the
algebra F0[S] + M_{X x X}(A) built from it.

Actions are total procedures returning a carrier point, with the
distinguished point ``x0`` encoding annihilation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .report import Report


@dataclass
class PointedBiset:
    x0: Any
    left: Callable  # (s, x) -> x
    right: Callable  # (x, s) -> x
    sg_mul: Callable  # (s, t) -> s t
    sg_zero: Any = None
    s_pool: list = field(default_factory=list)  # nonzero semigroup elements for sampling
    x_pool: list = field(default_factory=list)  # carrier points for sampling
    name: str = "biset"
    show_s: Callable = str
    show_x: Callable = str


def biset_axioms_check(b: PointedBiset, sample_s, sample_x) -> list[str]:
    """Every violation of zero absorption, action associativity and the two
    return properties on the given samples; an empty list means pass."""
    bad = []
    S = list(sample_s)
    X = list(sample_x)
    x0, z = b.x0, b.sg_zero
    for x in X:
        if b.left(z, x) != x0 or b.right(x, z) != x0:
            bad.append(f"zero of S does not annihilate {b.show_x(x)}")
    for s in S:
        if b.left(s, x0) != x0 or b.right(x0, s) != x0:
            bad.append(f"{b.show_s(s)} does not fix x0")
        for x in X:
            xs = b.right(x, s)
            back = b.left(s, xs)
            if back == x0 and xs != x0:
                bad.append(f"(1) fails: s(xs) = x0 but xs != x0 for s={b.show_s(s)}, x={b.show_x(x)}")
            elif back != x0 and back != x:
                bad.append(f"(1) fails: s(xs) = {b.show_x(back)} != x for s={b.show_s(s)}, x={b.show_x(x)}")
            sx = b.left(s, x)
            back = b.right(sx, s)
            if back == x0 and sx != x0:
                bad.append(f"(2) fails: (sx)s = x0 but sx != x0 for s={b.show_s(s)}, x={b.show_x(x)}")
            elif back != x0 and back != x:
                bad.append(f"(2) fails: (sx)s = {b.show_x(back)} != x for s={b.show_s(s)}, x={b.show_x(x)}")
    for s1 in S:
        for s2 in S:
            st = b.sg_mul(s1, s2)
            for x in X:
                if b.left(s1, b.left(s2, x)) != b.left(st, x):
                    bad.append(f"left action not associative at {b.show_s(s1)}, {b.show_s(s2)}, {b.show_x(x)}")
                if b.right(b.right(x, s1), s2) != b.right(x, st):
                    bad.append(f"right action not associative at {b.show_x(x)}, {b.show_s(s1)}, {b.show_s(s2)}")
    return bad


class ActionElement:
    """(semigroup part, matrix part) of F0[S] + M_{X x X}(A)."""

    __slots__ = ("algebra", "sg", "mat")

    def __init__(self, algebra, sg: dict, mat: dict):
        self.algebra = algebra
        self.sg = sg
        self.mat = mat

    def __add__(self, other):
        return self.algebra.add(self, other)

    def __neg__(self):
        A = self.algebra
        return ActionElement(A, {s: -c for s, c in self.sg.items()}, {k: -a for k, a in self.mat.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return self.algebra.mul(self, other)

    def __eq__(self, other):
        return isinstance(other, ActionElement) and self.sg == other.sg and self.mat == other.mat

    def __hash__(self):
        return hash((frozenset(self.sg.items()), frozenset(self.mat)))

    def __bool__(self):
        return bool(self.sg) or bool(self.mat)

    def components(self):
        """Single-term pieces, each again an ActionElement."""
        A = self.algebra
        for s, c in self.sg.items():
            yield ActionElement(A, {s: c}, {})
        for k, a in self.mat.items():
            yield ActionElement(A, {}, {k: a})

    def __str__(self):
        b = self.algebra.biset
        parts = [f"({c})*{b.show_s(s)}" for s, c in self.sg.items()]
        parts += [f"({self.algebra.coeff.format(a)})_{{{b.show_x(x)},{b.show_x(y)}}}" for (x, y), a in self.mat.items()]
        return " + ".join(parts) or "0"


class ActionAlgebra:
    def __init__(self, biset: PointedBiset, coeff, field=None):
        self.biset = biset
        self.coeff = coeff
        self.field = field or coeff.field

    def element(self, sg=None, mat=None) -> ActionElement:
        sg = {s: c for s, c in (sg or {}).items() if c and s != self.biset.sg_zero}
        mat = {k: a for k, a in (mat or {}).items() if not self.coeff.is_zero(a)}
        return ActionElement(self, sg, mat)

    def add(self, x, y):
        sg = dict(x.sg)
        for s, c in y.sg.items():
            sg[s] = sg.get(s, 0) + c
        mat = dict(x.mat)
        for k, a in y.mat.items():
            mat[k] = mat[k] + a if k in mat else a
        return self.element(sg, mat)

    def mul(self, x, y):
        b = self.biset
        x0 = b.x0
        sg: dict = {}
        mat: dict = {}

        def put(key, a):
            mat[key] = mat[key] + a if key in mat else a

        for s, c in x.sg.items():
            for t, d in y.sg.items():
                st = b.sg_mul(s, t)
                if st != b.sg_zero:
                    sg[st] = sg.get(st, 0) + c * d
            for (p, q), a in y.mat.items():
                sp = b.left(s, p)
                if sp != x0:
                    put((sp, q), c * a)
        for (p, q), a in x.mat.items():
            for t, d in y.sg.items():
                qt = b.right(q, t)
                if qt != x0:
                    put((p, qt), d * a)
            for (r, u), a2 in y.mat.items():
                if q == r:
                    put((p, u), a * a2)
        return self.element(sg, mat)

    def random_element(self, rng, max_terms: int = 2) -> ActionElement:
        b = self.biset
        sg, mat = {}, {}
        for _ in range(rng.randint(0, max_terms)):
            if b.s_pool:
                s = rng.choice(b.s_pool)
                sg[s] = sg.get(s, 0) + self.field.random(rng, 3, nonzero=True)
        for _ in range(rng.randint(0 if sg else 1, max_terms)):
            if b.x_pool:
                key = (rng.choice(b.x_pool), rng.choice(b.x_pool))
                a = self.coeff.random_element(rng)
                mat[key] = mat[key] + a if key in mat else a
        return self.element(sg, mat)


def action_mul(u: ActionElement, v: ActionElement, b: PointedBiset | None = None) -> ActionElement:
    if u.algebra is not v.algebra:
        raise ValueError("elements over different bisets or coefficient algebras")
    if b is not None and b is not u.algebra.biset:
        raise ValueError("mismatched carriers")
    return u.algebra.mul(u, v)


def _classify(u, v, w) -> str:
    kinds = ["s" if e.sg else "m" for e in (u, v, w)]
    if kinds == ["m", "s", "m"]:
        return "(a_{x,y} s) b_{z,t}"
    return "({} {}) {}".format(*kinds)


def associativity_probe(alg: ActionAlgebra, samples: int, seed: int = 0) -> Report:
    """Random-triple check of (uv)w = u(vw); on failure, narrow the
    counterexample down to single-term factors."""
    rep = Report(f"associativity {alg.biset.name}")
    rng = random.Random(seed)
    for i in range(samples):
        u, v, w = (alg.random_element(rng) for _ in range(3))
        if (u * v) * w == u * (v * w):
            continue
        for a in u.components():
            for s in v.components():
                for c in w.components():
                    if (a * s) * c != a * (s * c):
                        rep.fail(f"triple {i}: {_classify(a, s, c)} with a={a}, s={s}, b={c}")
                        rep.witness = (a, s, c)
                        return rep
        rep.fail(f"triple {i}: non-associative triple {u} | {v} | {w}")
        rep.witness = (u, v, w)
        return rep
    rep.note(f"{samples} random triples, exact equality")
    return rep
