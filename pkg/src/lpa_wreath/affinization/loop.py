"""The loop wreath A wr L(loop) as F[t, t^-1] + M(A), inside the bigger
algebra F[t, t^-1] + M~(A) of row- and column-finite matrices.

Index convention: the bridge path c^i e is the matrix index i. The loop
acts on matrices through t -> S (shift down) and t^-1 -> S^T, and
t^a t^-b = t^(a-b) - sum_{j=1..min(a,b)} (1)_{a-j, b-j}.
"""

from __future__ import annotations

import itertools

from ..graph import Path
from ..linalg import SparseBasis
from ..report import Report
from ..wreath.core import X0, BridgePath, WreathAlgebra, loop_extension
from .banded import BandedOperator, banded_mul


class AffineElement:
    __slots__ = ("algebra", "laurent", "op")

    def __init__(self, algebra, laurent: dict, op: BandedOperator):
        self.algebra = algebra
        self.laurent = {k: c for k, c in laurent.items() if c}
        self.op = op

    def __add__(self, other):
        lau = dict(self.laurent)
        for k, c in other.laurent.items():
            lau[k] = lau.get(k, 0) + c
        return AffineElement(self.algebra, lau, self.op + other.op)

    def __neg__(self):
        return self.scale(-self.algebra.field.one)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return AffineElement(self.algebra, {k: c * v for k, v in self.laurent.items()}, self.op.scale(c))

    def __mul__(self, other):
        if isinstance(other, AffineElement):
            return self.algebra.mul(self, other)
        return self.scale(self.algebra.field(other))

    def __rmul__(self, c):
        return self.scale(self.algebra.field(c))

    def equals(self, other, window: int | None = None) -> bool:
        """Exact equality of the Laurent parts and of the matrix parts on the
        window (all of the matrix when both parts are finite)."""
        if self.laurent != other.laurent:
            return False
        if self.op.is_finite and other.op.is_finite:
            return self.op.corrections == other.op.corrections
        n = window or self.algebra.default_window
        n = max(n, self.op.correction_extent(), other.op.correction_extent())
        return self.op.equals_on(other.op, n)

    def __eq__(self, other):
        return isinstance(other, AffineElement) and self.equals(other)

    __hash__ = None

    @property
    def is_finite_matrix(self) -> bool:
        return not self.laurent and self.op.is_finite

    def matrix_part(self):
        return AffineElement(self.algebra, {}, self.op)

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"<AffineElement {self}>"


def laurent_name(k: int) -> str:
    if k == 0:
        return "v"
    base = "t" if k > 0 else "tinv"
    return base if abs(k) == 1 else f"{base}^{abs(k)}"


class AffineLoop:
    """Handle for the loop wreath over a unital coefficient algebra A."""

    def __init__(self, A, default_window: int = 12):
        self.coeff = A
        self.field = A.field
        self.default_window = default_window
        self.v = self.laurent_monomial(0)
        self.t = self.laurent_monomial(1)
        self.tinv = self.laurent_monomial(-1)

    # constructors

    def element(self, laurent=None, op=None) -> AffineElement:
        return AffineElement(self, dict(laurent or {}), op if op is not None else BandedOperator(self.coeff))

    def laurent_monomial(self, k: int, c=None) -> AffineElement:
        return self.element({k: self.field.one if c is None else c})

    def unit(self, a, i: int, j: int) -> AffineElement:
        """The matrix unit (a)_{i,j}."""
        return self.element({}, BandedOperator.finite(self.coeff, {(i, j): a}))

    def e00(self) -> AffineElement:
        return self.unit(self.coeff.one, 0, 0)

    def diagonal(self, fn) -> AffineElement:
        """a = sum_i (fn(i))_{i,i}."""
        return self.element({}, BandedOperator.diagonal(self.coeff, fn))

    def transporter(self, i: int, k: int) -> list:
        """Word for (1)_{i,k} = t^i (1)_{0,0} tinv^k."""
        return ["t"] * i + ["E00"] + ["tinv"] * k

    # arithmetic

    def rho(self, laurent: dict) -> BandedOperator:
        op = BandedOperator(self.coeff)
        for k, c in laurent.items():
            op = op + BandedOperator.shift(self.coeff, k).scale(c)
        return op

    def laurent_product(self, a: int, b: int):
        """t^a t^b as (exponent, finite corrections)."""
        if a > 0 and b < 0:
            m = min(a, -b)
            corr = {(a - j, -b - j): -self.coeff.one for j in range(1, m + 1)}
            return a + b, corr
        return a + b, {}

    def mul(self, x: AffineElement, y: AffineElement) -> AffineElement:
        A = self.coeff
        lau: dict = {}
        corr: dict = {}
        for a, c1 in x.laurent.items():
            for b, c2 in y.laurent.items():
                k, extra = self.laurent_product(a, b)
                lau[k] = lau.get(k, 0) + c1 * c2
                for key, val in extra.items():
                    val = (c1 * c2) * val
                    corr[key] = corr[key] + val if key in corr else val
        op = BandedOperator.finite(A, corr)
        if y.op:
            if x.laurent:
                op = op + banded_mul(self.rho(x.laurent), y.op)
            op = op + banded_mul(x.op, y.op)
        if x.op and y.laurent:
            op = op + banded_mul(x.op, self.rho(y.laurent))
        return AffineElement(self, lau, op)

    def power(self, x, n: int):
        out = self.v
        for _ in range(n):
            out = self.mul(out, x)
        return out

    def evaluate(self, word, letters: dict) -> AffineElement:
        out = None
        for w in word:
            out = letters[w] if out is None else self.mul(out, letters[w])
        return out if out is not None else self.v

    # comparisons with the general wreath product

    def wreath(self) -> WreathAlgebra:
        return WreathAlgebra(loop_extension(self.coeff))

    def from_wreath(self, x) -> AffineElement:
        lau = {}
        for (p, q), c in x.L.items():
            if p.edges and q.edges:
                raise ValueError(f"{p}{q} is not a normal loop monomial")
            lau[len(p.edges) - len(q.edges)] = c
        corr = {}
        for (p, q), a in x.M.items():
            if p is X0 or q is X0:
                raise ValueError("the X0 row and column are outside the N x N picture")
            corr[(len(p.path.edges), len(q.path.edges))] = a
        return self.element(lau, BandedOperator.finite(self.coeff, corr))

    def to_wreath(self, x: AffineElement, B: WreathAlgebra):
        if not x.op.is_finite:
            raise ValueError("only finite matrix parts live in the wreath product")
        L = {}
        for k, c in x.laurent.items():
            cs = ("c",) * abs(k)
            L[(Path("v", cs), Path("v")) if k >= 0 else (Path("v"), Path("v", cs))] = c
        M = {(BridgePath(Path("v", ("c",) * i), "e"), BridgePath(Path("v", ("c",) * j), "e")): a
             for (i, j), a in x.op.corrections.items()}
        return B.element(L, M)

    # printing

    def format(self, x) -> str:
        parts = [f"{c}*{laurent_name(k)}" if c != 1 else laurent_name(k) for k, c in sorted(x.laurent.items())]
        for d in sorted(x.op.diagonals):
            parts.append(f"diag[{d}]")
        for (i, j), a in sorted(x.op.corrections.items()):
            parts.append(f"({self.coeff.format(a)})_{{{i},{j}}}")
        return " + ".join(parts) if parts else "0"


def loop_wreath(A, default_window: int = 12) -> AffineLoop:
    return AffineLoop(A, default_window)


def relations_check(W: AffineLoop, n: int = 4, a=None) -> list:
    """The six shift relations as (label, holds) pairs, tested for all
    i, j < n with entry ``a``."""
    A = W.coeff
    a = A.one if a is None else a
    t, ti, v = W.t, W.tinv, W.v
    zero = W.element()
    rng = range(n)
    out = [
        ("t^-1 t = v", W.mul(ti, t) == v),
        ("t t^-1 = v - (1)_{0,0}", W.mul(t, ti) == v - W.e00()),
        ("t a_{i,j} = a_{i+1,j}", all(W.mul(t, W.unit(a, i, j)) == W.unit(a, i + 1, j) for i in rng for j in rng)),
        ("t^-1 a_{0,j} = 0", all(W.mul(ti, W.unit(a, 0, j)) == zero for j in rng)),
        ("a_{i,j} t^-1 = a_{i,j+1}", all(W.mul(W.unit(a, i, j), ti) == W.unit(a, i, j + 1) for i in rng for j in rng)),
        ("a_{i,0} t = 0", all(W.mul(W.unit(a, i, 0), t) == zero for i in rng)),
    ]
    return out


def generator_letters(W: AffineLoop, diag) -> dict:
    return {"t": W.t, "tinv": W.tinv, "a": W.diagonal(diag), "E00": W.e00()}


def prop3_witness(W: AffineLoop, word_indices, i: int, j: int) -> list:
    """Generator word for (a_{k1} ... a_{km})_{i,j}."""
    ks = list(word_indices)
    stops = [i] + ks + [j]
    word = []
    for s in range(len(stops) - 1):
        word += W.transporter(stops[s], stops[s + 1])
        if s < len(ks):
            word.append("a")
    return word


def _product(A, gens, ks):
    out = A.one
    for k in ks:
        out = out * gens(k)
    return out


def affine_span(W: AffineLoop, gens, degree: int, window: int | None = None, cap: int = 8):
    """Independent products of 1..degree generators (a basis of their span),
    plus the row-reduced basis used for membership queries."""
    if degree > cap:
        raise ValueError(f"degree {degree} exceeds cap {cap}")
    gens = list(gens)
    band = max((g.op.bandwidth for g in gens), default=0)
    window = window or (degree * (band + 1) + 2)
    products = []
    for n in range(1, degree + 1):
        for word in itertools.product(range(len(gens)), repeat=n):
            products.append(W.evaluate(word, dict(enumerate(gens))))
    span = AffineSpan(W, window)
    basis = [x for x in products if span.add(x)]
    return basis, span


class AffineSpan:
    def __init__(self, W: AffineLoop, window: int):
        self.W = W
        self.window = window
        self.basis = SparseBasis()

    def coords(self, x: AffineElement) -> dict:
        out = {(0, k): c for k, c in x.laurent.items()}
        entries = sorted(x.op.window(max(self.window, x.op.correction_extent())).items())
        vecs = self.W.coeff.vectorize([a for _, a in entries])
        for ((i, j), _), vec in zip(entries, vecs):
            for key, c in vec.items():
                out[(1, i, j, key)] = c
        return out

    def add(self, x) -> bool:
        return self.basis.add(self.coords(x))

    def contains(self, x) -> bool:
        return self.basis.contains(self.coords(x))


def coefficient_words(n_gens: int, max_len: int):
    for m in range(max_len + 1):
        yield from itertools.product(range(n_gens), repeat=m)


def prop3_check(W: AffineLoop, degree: int = 6, window: int = 4, a_diag=None, word_len: int = 2) -> Report:
    """Targets use the true generators a_k of A; ``a_diag`` (default: the same
    sequence) supplies the diagonal generator a actually used in the words."""
    A = W.coeff
    diag = A.generator
    rep = Report(f"affine subalgebra containments (degree {degree}, window {window})")
    letters = generator_letters(W, a_diag or diag)

    # lower containment: Laurent monomials and every (w)_{i,j}
    for k in range(-window, window + 1):
        word = ["t"] * k if k >= 0 else ["tinv"] * (-k)
        rep.check(W.evaluate(word, letters) == W.laurent_monomial(k), f"no witness for {laurent_name(k)}")
    found = within = 0
    for ks in coefficient_words(window, word_len):
        w = _product(A, diag, ks)
        for i in range(window):
            for j in range(window):
                word = prop3_witness(W, ks, i, j)
                ok = W.evaluate(word, letters) == W.unit(w, i, j)
                if rep.check(ok, f"witness for ({'.'.join(f'a{k}' for k in ks) or '1'})_{{{i},{j}}} fails"):
                    found += 1
                    within += len(word) <= degree
    rep.note(f"{found} matrix units (|w| <= {word_len}, i, j < {window}) have verified generator words")
    rep.note(f"{within} of them within {degree} generators")

    # upper containment: products stay banded with offsets bounded by length
    gens = [letters[k] for k in ("t", "tinv", "a", "E00")]
    count = 0
    level = [W.v]
    for n in range(1, degree + 1):
        level = [W.mul(x, g) for x in level for g in gens]
        for x in level:
            count += 1
            lau_ok = all(abs(k) <= n for k in x.laurent)
            band_ok = x.op.bandwidth <= n
            rep.check(lau_ok and band_ok, f"product of {n} generators leaves the banded algebra: {x}")
    rep.note(f"{count} generator products checked banded (offsets <= length)")
    return rep


def non_nil_witness(W: AffineLoop, n: int = 20) -> Report:
    """((t)_{0,0})^k = (t^k)_{0,0} != 0 for k <= n, with t in A0."""
    A = W.coeff
    x = W.unit(A.t, 0, 0)
    rep = Report(f"non-nilpotence of (t)_{{0,0}} up to n = {n}")
    power = x
    for k in range(1, n + 1):
        target = W.unit(A.t ** k, 0, 0)
        rep.check(power == target and bool(power.op), f"((t)_{{0,0}})^{k} != (t^{k})_{{0,0}}")
        power = W.mul(power, x)
    return rep
