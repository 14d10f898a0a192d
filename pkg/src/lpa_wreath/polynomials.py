"""Univariate polynomials and rational functions in ``t`` over an exact field."""

from __future__ import annotations

from fractions import Fraction

from .scalars import QQ, Field, GFElement


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Coefficients stored low degree first; the zero polynomial is ``()``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs=(), field: Field = QQ):
        self.field = field
        self.coeffs = _trim(field(c) for c in coeffs)

    @classmethod
    def t(cls, field: Field = QQ) -> Poly:
        return cls((0, 1), field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> Poly:
        return cls((c,), field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1]

    def at_zero(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly((other,), self.field)

    def __add__(self, other):
        if not isinstance(other, (Poly, int)) and not _is_scalar(other):
            return NotImplemented
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        if not isinstance(other, (Poly, int)) and not _is_scalar(other):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly((), self.field)
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out, self.field)
        if isinstance(other, int) or _is_scalar(other):
            return Poly([c * other for c in self.coeffs], self.field)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly((1,), self.field)
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: Poly):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [self.field.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lead = self.field.inv(other.lead())
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] * inv_lead
            if not c:
                continue
            quo[k - d] = c
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= c * b
        return Poly(quo, self.field), Poly(rem, self.field)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        return self * self.field.inv(self.lead()) if self.coeffs else self

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int) or _is_scalar(other):
            return self.coeffs == Poly((other,), self.field).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self.coeffs, "t")


def _is_scalar(x) -> bool:
    return isinstance(x, (Fraction, GFElement))


def format_poly(coeffs, var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        neg = str(c).startswith("-")
        mag = str(-c) if neg else str(c)
        if mono and mag == "1":
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = mag
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Reduced fraction f/g.

    Canonical form: gcd(f, g) = 1 and g(0) = 1 when g(0) != 0; otherwise g is
    monic. The zero function is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly((1,), num.field)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, Poly((1,), num.field)
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        g0 = den.at_zero()
        scale = den.field.inv(g0) if g0 else den.field.inv(den.lead())
        self.num, self.den = num * scale, den * scale

    @property
    def field(self):
        return self.num.field

    @classmethod
    def from_coeffs(cls, num, den=(1,), field: Field = QQ) -> RationalFunction:
        return cls(Poly(num, field), Poly(den, field))

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, int) or _is_scalar(other):
            return RationalFunction(Poly((other,), self.field))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        out = RationalFunction(Poly((1,), self.field))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        n = str(self.num)
        if len(self.num.coeffs) - sum(1 for c in self.num.coeffs if not c) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"


def ratfun_normalize(f: Poly, g: Poly) -> RationalFunction:
    return RationalFunction(f, g)


def a0_membership(r: RationalFunction) -> bool:
    """Whether r lies in A0 = {f/g : f(0) = 0, g(0) = 1}."""
    return not r.num.at_zero() and bool(r.den.at_zero())


def a0_quasi_inverse(x: RationalFunction) -> RationalFunction:
    """The y with x + y + x*y = 0; for x = f/g this is -f/(g + f)."""
    if not a0_membership(x):
        raise ValueError(f"{x} is not in A0")
    return RationalFunction(-x.num, x.den + x.num)
