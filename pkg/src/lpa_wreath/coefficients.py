"""Pluggable unital coefficient algebras with a designated family of
pairwise orthogonal idempotents.

Elements are plain Python objects supporting ``+``, ``-``, ``*`` and
multiplication by field scalars; the algebra object supplies the constants,
the idempotent family, generators, coordinates and printing.
"""

from __future__ import annotations

import itertools
import re
from abc import ABC, abstractmethod

from . import expr
from .polynomials import Poly, RationalFunction, format_poly, poly_gcd
from .scalars import QQ, Field


class CoefficientAlgebra(ABC):
    field: Field = QQ
    idempotents: dict = {}

    @property
    @abstractmethod
    def zero(self): ...

    @property
    @abstractmethod
    def one(self): ...

    def generators(self, n: int | None = None) -> list:
        return []

    def is_zero(self, a) -> bool:
        return not a

    @abstractmethod
    def coordinates(self, a) -> dict:
        """Coordinates of ``a`` in a fixed F-basis (keys must be sortable)."""

    def vectorize(self, elements) -> list[dict]:
        return [self.coordinates(a) for a in elements]

    @abstractmethod
    def random_element(self, rng): ...

    def format(self, a) -> str:
        return str(a)

    def _env(self):
        return _CoeffEnv(self)

    def lookup(self, name: str):
        if name in self.idempotents:
            return self.idempotents[name]
        raise expr.ExpressionError(f"unknown coefficient symbol {name!r}")

    def parse(self, text_or_node):
        node = expr.parse(text_or_node) if isinstance(text_or_node, str) else text_or_node
        return expr.evaluate(node, self._env())

    def idempotent_violations(self) -> list[str]:
        """Exhaustive check that the designated family is pairwise orthogonal idempotents."""
        bad = []
        items = list(self.idempotents.items())
        for name, e in items:
            if e * e != e:
                bad.append(f"{name}^2 != {name}")
        for (n1, e1), (n2, e2) in itertools.permutations(items, 2):
            if not self.is_zero(e1 * e2):
                bad.append(f"{n1}*{n2} != 0")
        return bad

    def corner(self, left, a, right):
        return left * a * right


class _CoeffEnv:
    def __init__(self, alg):
        self.alg = alg

    def scalar(self, c):
        return self.alg.field(c) * self.alg.one

    def scale(self, c, a):
        return self.alg.field(c) * a

    def ident(self, name):
        return self.alg.lookup(name)

    def star(self, name):
        raise expr.ExpressionError("'^*' is not defined in a coefficient algebra")


class ScalarAlgebra(CoefficientAlgebra):
    """A = F with the single idempotent 1."""

    def __init__(self, field: Field = QQ):
        self.field = field
        self.idempotents = {"1": field.one}

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def coordinates(self, a):
        return {(): a} if a else {}

    def random_element(self, rng):
        return self.field.random(rng)

    def lookup(self, name):
        if name in ("1", "one"):
            return self.one
        return super().lookup(name)

    def __repr__(self):
        return f"ScalarAlgebra({self.field})"


class DiagElement:
    """An element of F^k, componentwise arithmetic."""

    __slots__ = ("vals",)

    def __init__(self, vals):
        self.vals = tuple(vals)

    def __add__(self, o):
        if not isinstance(o, DiagElement):
            return NotImplemented
        return DiagElement(a + b for a, b in zip(self.vals, o.vals))

    def __sub__(self, o):
        if not isinstance(o, DiagElement):
            return NotImplemented
        return DiagElement(a - b for a, b in zip(self.vals, o.vals))

    def __neg__(self):
        return DiagElement(-a for a in self.vals)

    def __mul__(self, o):
        if isinstance(o, DiagElement):
            return DiagElement(a * b for a, b in zip(self.vals, o.vals))
        return DiagElement(a * o for a in self.vals)

    def __rmul__(self, c):
        return DiagElement(c * a for a in self.vals)

    def __eq__(self, o):
        return isinstance(o, DiagElement) and self.vals == o.vals

    def __hash__(self):
        return hash(self.vals)

    def __bool__(self):
        return any(self.vals)

    def __repr__(self):
        return f"DiagElement{self.vals}"


class DiagonalAlgebra(CoefficientAlgebra):
    """A = F^k; the k coordinate idempotents carry the given names."""

    def __init__(self, names, field: Field = QQ):
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate idempotent names")
        self.field = field
        self.names = names
        k = len(names)
        self.idempotents = {
            n: DiagElement(field.one if j == i else field.zero for j in range(k)) for i, n in enumerate(names)
        }

    @property
    def zero(self):
        return DiagElement([self.field.zero] * len(self.names))

    @property
    def one(self):
        return DiagElement([self.field.one] * len(self.names))

    def coordinates(self, a):
        return {i: v for i, v in enumerate(a.vals) if v}

    def random_element(self, rng):
        return DiagElement(self.field.random(rng) for _ in self.names)

    def format(self, a):
        terms = []
        for n, v in zip(self.names, a.vals):
            if not v:
                continue
            s = str(v)
            body = n if s in ("1", "-1") else f"{s.lstrip('-')}*{n}"
            neg = s.startswith("-")
            if not terms:
                terms.append(("-" if neg else "") + body)
            else:
                terms.append((" - " if neg else " + ") + body)
        return "".join(terms) or "0"

    def lookup(self, name):
        if name == "one":
            return self.one
        return super().lookup(name)


class PolynomialAlgebra(CoefficientAlgebra):
    """A = F[x] with idempotent family {1} and the single generator x."""

    def __init__(self, field: Field = QQ, var: str = "x"):
        self.field = field
        self.var = var
        self.idempotents = {"1": Poly((1,), field)}

    @property
    def zero(self):
        return Poly((), self.field)

    @property
    def one(self):
        return Poly((1,), self.field)

    @property
    def x(self):
        return Poly((0, 1), self.field)

    def generators(self, n=None):
        return [self.x]

    def coordinates(self, a):
        return {k: c for k, c in enumerate(a.coeffs) if c}

    def random_element(self, rng, max_degree=2):
        return Poly([self.field.random(rng) for _ in range(rng.randint(0, max_degree) + 1)], self.field)

    def format(self, a):
        return format_poly(a.coeffs, self.var)

    def lookup(self, name):
        if name == self.var:
            return self.x
        if name in ("1", "one"):
            return self.one
        return super().lookup(name)


class MatElement:
    """n x n matrix over a field, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def n(self):
        return len(self.rows)

    def __add__(self, o):
        if not isinstance(o, MatElement):
            return NotImplemented
        return MatElement([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __neg__(self):
        return MatElement([[-a for a in r] for r in self.rows])

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, MatElement):
            cols = list(zip(*o.rows))
            return MatElement([[sum((a * b for a, b in zip(r, c)), 0 * r[0]) for c in cols] for r in self.rows])
        return MatElement([[a * o for a in r] for r in self.rows])

    def __rmul__(self, c):
        return MatElement([[c * a for a in r] for r in self.rows])

    def __eq__(self, o):
        return isinstance(o, MatElement) and self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(any(r) for r in self.rows)

    def __repr__(self):
        return f"MatElement({[list(map(str, r)) for r in self.rows]})"

    def __str__(self):
        return "[" + "; ".join(" ".join(map(str, r)) for r in self.rows) + "]"


class MatrixAlgebra(CoefficientAlgebra):
    """A = M_n(F), noncommutative; idempotents are the diagonal units E11..Enn."""

    def __init__(self, n: int = 2, field: Field = QQ):
        self.n = n
        self.field = field
        self.idempotents = {f"E{i + 1}{i + 1}": self.unit(i, i) for i in range(n)}

    def unit(self, i, j, c=None):
        c = self.field.one if c is None else c
        z = self.field.zero
        return MatElement([[c if (r, s) == (i, j) else z for s in range(self.n)] for r in range(self.n)])

    @property
    def zero(self):
        return MatElement([[self.field.zero] * self.n for _ in range(self.n)])

    @property
    def one(self):
        return MatElement([[self.field.one if r == s else self.field.zero for s in range(self.n)] for r in range(self.n)])

    def generators(self, n=None):
        return [self.unit(i, j) for i in range(self.n) for j in range(self.n)]

    def coordinates(self, a):
        return {(i, j): v for i, r in enumerate(a.rows) for j, v in enumerate(r) if v}

    def random_element(self, rng):
        return MatElement([[self.field.random(rng, 2) for _ in range(self.n)] for _ in range(self.n)])

    def lookup(self, name):
        m = re.fullmatch(r"E(\d)(\d)", name)
        if m:
            return self.unit(int(m.group(1)) - 1, int(m.group(2)) - 1)
        if name == "one":
            return self.one
        return super().lookup(name)


def enumerate_unit_denominators(field: Field = QQ):
    """Polynomials g with g(0) = 1 in a fixed order: g = 1 first, then by
    height h = 1, 2, ... all coefficient vectors of degree <= h with entries in
    [-h, h] not seen at a smaller height."""
    seen = set()
    h = 0
    while True:
        rng = range(-h, h + 1)
        for deg in range(0, h + 1):
            for tail in itertools.product(rng, repeat=deg):
                if deg and tail[-1] == 0:
                    continue
                g = Poly((1,) + tail, field)
                if g.coeffs in seen:
                    continue
                seen.add(g.coeffs)
                yield g
        h += 1


class LocalRationalAlgebra(CoefficientAlgebra):
    """A = F*1 + A0 inside F(t): rational functions f/g with g(0) != 0.

    The generator sequence is a_k = t/g_k over the enumerated denominators
    g_k with g_k(0) = 1; together with 1 these generate A.
    """

    def __init__(self, field: Field = QQ):
        self.field = field
        self.idempotents = {"1": self.one}
        self._gens: list = []
        self._den_iter = enumerate_unit_denominators(field)

    @property
    def zero(self):
        return RationalFunction(Poly((), self.field))

    @property
    def one(self):
        return RationalFunction(Poly((1,), self.field))

    @property
    def t(self):
        return RationalFunction(Poly((0, 1), self.field))

    def generator(self, k: int):
        while len(self._gens) <= k:
            g = next(self._den_iter)
            self._gens.append(RationalFunction(Poly((0, 1), self.field), g))
        return self._gens[k]

    def generators(self, n=None):
        n = 4 if n is None else n
        return [self.generator(k) for k in range(n)]

    def contains(self, r) -> bool:
        return isinstance(r, RationalFunction) and bool(r.den.at_zero())

    def coordinates(self, a):
        return self.vectorize([a])[0]

    def vectorize(self, elements):
        # Put everything over one common denominator; numerator coefficients
        # are then faithful coordinates for linear (in)dependence.
        elements = list(elements)
        common = Poly((1,), self.field)
        for r in elements:
            common = common * (r.den // poly_gcd(common, r.den))
        out = []
        for r in elements:
            num = r.num * (common // r.den)
            out.append({k: c for k, c in enumerate(num.coeffs) if c})
        return out

    def random_element(self, rng, unit_part: bool = True):
        return random_a0(rng, self.field) + (self.field.random(rng, 2) if unit_part else 0)

    def lookup(self, name):
        if name == "t":
            return self.t
        if name in ("1", "one"):
            return self.one
        if name.startswith("a") and name[1:].isdigit():
            return self.generator(int(name[1:]))
        return super().lookup(name)


def random_a0(rng, field: Field = QQ, max_degree: int = 2) -> RationalFunction:
    """Random element f/g of A0: f(0) = 0, g(0) = 1."""
    f = Poly([0] + [field.random(rng, 3) for _ in range(rng.randint(0, max_degree) + 1)], field)
    g = Poly([1] + [field.random(rng, 3) for _ in range(rng.randint(0, max_degree))], field)
    return RationalFunction(f, g)


class A0Algebra(CoefficientAlgebra):
    """The non-unital algebra A0 itself; wrap it in ``Unitization`` to use it
    as a coefficient algebra."""

    unital = False

    def __init__(self, field: Field = QQ):
        self.field = field
        self.idempotents = {}

    @property
    def zero(self):
        return RationalFunction(Poly((), self.field))

    @property
    def one(self):
        raise ValueError("A0 has no unit")

    def coordinates(self, a):
        return LocalRationalAlgebra(self.field).coordinates(a)

    def random_element(self, rng):
        return random_a0(rng, self.field)


class UnitElement:
    """Pair (lambda, a) standing for lambda*1 + a."""

    __slots__ = ("scalar", "part")

    def __init__(self, scalar, part):
        self.scalar = scalar
        self.part = part

    def __add__(self, o):
        if not isinstance(o, UnitElement):
            return NotImplemented
        return UnitElement(self.scalar + o.scalar, self.part + o.part)

    def __neg__(self):
        return UnitElement(-self.scalar, -self.part)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, UnitElement):
            part = self.part * o.part + o.scalar * self.part + self.scalar * o.part
            return UnitElement(self.scalar * o.scalar, part)
        return UnitElement(self.scalar * o, o * self.part)

    def __rmul__(self, c):
        return UnitElement(c * self.scalar, c * self.part)

    def __eq__(self, o):
        return isinstance(o, UnitElement) and self.scalar == o.scalar and self.part == o.part

    def __hash__(self):
        return hash((self.scalar, self.part))

    def __bool__(self):
        return bool(self.scalar) or bool(self.part)

    def __repr__(self):
        return f"UnitElement({self.scalar}, {self.part})"

    def __str__(self):
        if not self.scalar:
            return str(self.part)
        if not self.part:
            return str(self.scalar)
        return f"{self.scalar} + {self.part}"


class Unitization(CoefficientAlgebra):
    """Formal unit adjoined to a (possibly non-unital) algebra: F*1 + base."""

    def __init__(self, base: CoefficientAlgebra):
        self.base = base
        self.field = base.field
        self.idempotents = {"1": self.one}
        for n, e in base.idempotents.items():
            self.idempotents[n] = UnitElement(self.field.zero, e)
        if len(self.idempotents) > 1:
            # 1 is not orthogonal to the base idempotents
            del self.idempotents["1"]

    @property
    def zero(self):
        return UnitElement(self.field.zero, self.base.zero)

    @property
    def one(self):
        return UnitElement(self.field.one, self.base.zero)

    def embed(self, a):
        return UnitElement(self.field.zero, a)

    def generators(self, n=None):
        return [self.embed(a) for a in self.base.generators(n)]

    def coordinates(self, a):
        out = {("1",): a.scalar} if a.scalar else {}
        for k, v in self.base.coordinates(a.part).items():
            out[("a", k)] = v
        return out

    def random_element(self, rng):
        return UnitElement(self.field.random(rng, 2), self.base.random_element(rng))
