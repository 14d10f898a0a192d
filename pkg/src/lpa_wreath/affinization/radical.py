"""Quasi-inverses in A0 and in finite matrices over A0."""

from __future__ import annotations

import random

from ..coefficients import random_a0
from ..linalg import solve
from ..polynomials import Poly, RationalFunction, a0_membership, a0_quasi_inverse
from ..report import Report
from ..scalars import QQ


def _matmul(x, y, zero):
    n = len(x)
    return [[sum((x[i][k] * y[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]


def radical_matrix_quasi_inverse(m, field=QQ):
    """y with m + y + m y = 0 for a square matrix m over A0."""
    n = len(m)
    zero = RationalFunction(Poly((), field))
    one = RationalFunction(Poly((1,), field))
    for row in m:
        for a in row:
            if not a0_membership(a):
                raise ValueError(f"entry {a} is not in A0")
    lhs = [[(one if i == j else zero) + m[i][j] for j in range(n)] for i in range(n)]
    rhs = [[-m[i][j] for j in range(n)] for i in range(n)]
    y = solve(lhs, rhs)
    for row in y:
        for a in row:
            assert a0_membership(a), f"quasi-inverse entry {a} left A0"
    return y


def quasi_inverse_defects(m, y, zero):
    """(m + y + m y, m + y + y m) entrywise."""
    n = len(m)
    my, ym = _matmul(m, y, zero), _matmul(y, m, zero)
    left = [[m[i][j] + y[i][j] + my[i][j] for j in range(n)] for i in range(n)]
    right = [[m[i][j] + y[i][j] + ym[i][j] for j in range(n)] for i in range(n)]
    return left, right


def random_a0_matrix(rng, n: int, field=QQ, density: float = 0.7, max_degree: int = 1):
    # degree 1 entries keep the exact elimination fast; degree 2 is ~5x slower
    zero = RationalFunction(Poly((), field))
    return [[random_a0(rng, field, max_degree) if rng.random() < density else zero for _ in range(n)] for _ in range(n)]


def radical_probe(elements: int = 200, matrices: int = 100, max_size: int = 4, seed: int = 0, field=QQ) -> Report:
    rep = Report("quasi-regularity of A0 and M(A0)")
    rng = random.Random(seed)
    zero = RationalFunction(Poly((), field))
    for i in range(elements):
        x = random_a0(rng, field)
        y = a0_quasi_inverse(x)
        rep.check(a0_membership(y), f"quasi-inverse of {x} is {y}, outside A0")
        rep.check(not (x + y + x * y) and not (x + y + y * x), f"{x} + {y} + {x}*{y} != 0")
    rep.note(f"{elements} random elements of A0")
    for k in range(matrices):
        n = rng.randint(1, max_size)
        m = random_a0_matrix(rng, n, field)
        y = radical_matrix_quasi_inverse(m, field)
        left, right = quasi_inverse_defects(m, y, zero)
        ok = all(not a for row in left + right for a in row)
        rep.check(ok, f"matrix sample {k}: quasi-inverse identities fail")
    rep.note(f"{matrices} random matrices over A0 of size <= {max_size}")
    return rep
