"""Row- and column-finite N x N matrices over a coefficient algebra.

An operator is a finite set of diagonals, each an offset d = j - i with an
entry function i -> A, plus a finite dict of corrections (i, j) -> A.
Entries are evaluated lazily and cached; only indices i, j >= 0 exist.
"""

from __future__ import annotations

from functools import lru_cache


def _const(a):
    return lambda i: a


class BandedOperator:
    __slots__ = ("coeff", "diagonals", "corrections")

    def __init__(self, coeff, diagonals=None, corrections=None):
        self.coeff = coeff
        self.diagonals = dict(diagonals or {})
        z = coeff.is_zero
        self.corrections = {k: a for k, a in (corrections or {}).items() if not z(a)}

    # constructors

    @classmethod
    def zero(cls, coeff):
        return cls(coeff)

    @classmethod
    def diagonal(cls, coeff, fn, offset: int = 0):
        return cls(coeff, {offset: fn})

    @classmethod
    def constant_diagonal(cls, coeff, a, offset: int = 0):
        return cls(coeff, {offset: _const(a)})

    @classmethod
    def identity(cls, coeff):
        return cls.constant_diagonal(coeff, coeff.one)

    @classmethod
    def shift(cls, coeff, k: int):
        """Row i of the result is row i - k of the argument: S^k for k >= 0,
        (S^T)^|k| for k < 0."""
        return cls.constant_diagonal(coeff, coeff.one, -k)

    @classmethod
    def finite(cls, coeff, entries: dict):
        return cls(coeff, {}, entries)

    # entries

    def entry(self, i: int, j: int):
        if i < 0 or j < 0:
            return self.coeff.zero
        d = j - i
        val = self.diagonals[d](i) if d in self.diagonals else self.coeff.zero
        if (i, j) in self.corrections:
            val = val + self.corrections[(i, j)]
        return val

    def row_support(self, i: int) -> list:
        cols = {i + d for d in self.diagonals if i + d >= 0}
        cols.update(j for (r, j) in self.corrections if r == i)
        return sorted(cols)

    def col_support(self, j: int) -> list:
        rows = {j - d for d in self.diagonals if j - d >= 0}
        rows.update(i for (i, c) in self.corrections if c == j)
        return sorted(rows)

    def window(self, n: int) -> dict:
        z = self.coeff.is_zero
        out = {}
        for i in range(n):
            for j in range(n):
                a = self.entry(i, j)
                if not z(a):
                    out[(i, j)] = a
        return out

    @property
    def is_finite(self) -> bool:
        return not self.diagonals

    @property
    def bandwidth(self) -> int:
        return max((abs(d) for d in self.diagonals), default=0)

    def correction_extent(self) -> int:
        return max((max(i, j) + 1 for i, j in self.corrections), default=0)

    def equals_on(self, other, n: int) -> bool:
        return self.window(n) == other.window(n)

    def __bool__(self):
        return bool(self.diagonals) or bool(self.corrections)

    # linear structure

    def __add__(self, other):
        diags = dict(self.diagonals)
        for d, f in other.diagonals.items():
            if d in diags:
                g = diags[d]
                diags[d] = lru_cache(maxsize=None)(lambda i, f=f, g=g: g(i) + f(i))
            else:
                diags[d] = f
        corr = dict(self.corrections)
        for k, a in other.corrections.items():
            corr[k] = corr[k] + a if k in corr else a
        return BandedOperator(self.coeff, diags, corr)

    def scale(self, c):
        if not c:
            return BandedOperator(self.coeff)
        diags = {d: (lambda i, f=f: c * f(i)) for d, f in self.diagonals.items()}
        return BandedOperator(self.coeff, diags, {k: c * a for k, a in self.corrections.items()})

    def __neg__(self):
        return self.scale(-self.coeff.field.one)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return banded_mul(self, other)

    def __repr__(self):
        return f"BandedOperator(offsets={sorted(self.diagonals)}, corrections={len(self.corrections)})"


def banded_mul(x: BandedOperator, y: BandedOperator) -> BandedOperator:
    """X Y = Xd Yd + Xc Y + Xd Yc, where d marks diagonals and c corrections."""
    A = x.coeff
    groups: dict = {}
    for d1, f in x.diagonals.items():
        for d2, g in y.diagonals.items():
            groups.setdefault(d1 + d2, []).append((d1, f, g))
    diags = {}
    for d, terms in groups.items():
        def fn(i, terms=terms):
            acc = A.zero
            for d1, f, g in terms:
                if i + d1 >= 0:
                    acc = acc + f(i) * g(i + d1)
            return acc
        diags[d] = lru_cache(maxsize=None)(fn)
    corr: dict = {}

    def put(k, a):
        if k[0] >= 0 and k[1] >= 0:
            corr[k] = corr[k] + a if k in corr else a

    for (i, j), a in x.corrections.items():
        for k in y.row_support(j):
            put((i, k), a * y.entry(j, k))
    for (j, k), b in y.corrections.items():
        for d1, f in x.diagonals.items():
            i = j - d1
            if i >= 0:
                put((i, k), f(i) * b)
    return BandedOperator(A, diags, corr)


def dense_window_product(x: BandedOperator, y: BandedOperator, n: int, inner: int) -> dict:
    """Brute-force product on the n x n corner, summing over ``inner`` indices."""
    A = x.coeff
    out = {}
    for i in range(n):
        for k in range(n):
            acc = A.zero
            for j in range(inner):
                acc = acc + x.entry(i, j) * y.entry(j, k)
            if not A.is_zero(acc):
                out[(i, k)] = acc
    return out
