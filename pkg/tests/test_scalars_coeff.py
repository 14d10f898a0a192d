import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpa_wreath.coefficients import (
    A0Algebra,
    DiagonalAlgebra,
    LocalRationalAlgebra,
    MatrixAlgebra,
    PolynomialAlgebra,
    ScalarAlgebra,
    Unitization,
    enumerate_unit_denominators,
    random_a0,
)
from lpa_wreath.polynomials import (
    Poly,
    RationalFunction,
    a0_membership,
    a0_quasi_inverse,
    poly_gcd,
    ratfun_normalize,
)
from lpa_wreath.scalars import GF, QQ, GFElement, field_from_name

t = Poly.t()


def rf(num, den=(1,)):
    return RationalFunction.from_coeffs(num, den)


def test_rational_arithmetic():
    assert QQ(1) / 2 + QQ(1) / 3 == Fraction(5, 6)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ(0))
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(GF(5)(0))


def test_prime_field():
    F = GF(5)
    assert F(3) * F(4) == F(2)
    assert F(2).inverse() == F(3)
    assert F(Fraction(1, 2)) == F(3)
    assert F(7) == 2
    with pytest.raises(ValueError):
        GF(6)


def test_field_names():
    assert field_from_name("q") is QQ
    assert field_from_name("gf7") == GF(7)
    with pytest.raises(ValueError):
        field_from_name("reals")


@given(st.integers(0, 12), st.integers(0, 12), st.integers(1, 12))
def test_gf_axioms(a, b, c):
    F = GF(13)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    assert z * z.inverse() == 1
    assert x - x == 0


def test_ratfun_normalize():
    assert ratfun_normalize(t * t, t) == RationalFunction(t)
    r = ratfun_normalize(2 * t, Poly.constant(2))
    assert (r.num, r.den) == (t, Poly.constant(1))
    r = ratfun_normalize(t, 1 - t)
    assert r.num == t and r.den == 1 - t
    with pytest.raises(ZeroDivisionError):
        ratfun_normalize(t, Poly(()))


def test_canonical_denominator():
    r = RationalFunction(t, Poly((2, 4)))
    assert r.den.at_zero() == 1
    assert r == rf((0, Fraction(1, 2)), (1, 2))


def test_a0_membership():
    assert a0_membership(rf((0, 1), (1, -1)))
    assert not a0_membership(rf((1,), (1, -1)))
    assert a0_membership(rf(()))


def test_a0_quasi_inverse_examples():
    assert a0_quasi_inverse(RationalFunction(t)) == RationalFunction(-t, 1 + t)
    assert a0_quasi_inverse(rf(())) == rf(())
    assert a0_quasi_inverse(rf((0, 1), (1, -1))) == RationalFunction(-t)
    with pytest.raises(ValueError):
        a0_quasi_inverse(rf((1,)))


def test_a0_quasi_inverse_random():
    rng = random.Random(3)
    for _ in range(200):
        x = random_a0(rng)
        y = a0_quasi_inverse(x)
        assert a0_membership(y)
        assert not (x + y + x * y)
        assert not (x + y + y * x)


coeffs = st.lists(st.integers(-3, 3), min_size=1, max_size=3)


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, coeffs, coeffs, coeffs, coeffs)
def test_ratfun_equality_is_congruence(a, b, c, d, e, f):
    def mk(n, m):
        den = Poly([1] + m[1:])
        return RationalFunction(Poly(n), den)

    x, y, z = mk(a, b), mk(c, d), mk(e, f)
    # same value, different raw representation
    x2 = RationalFunction(x.num * Poly((1, 1)), x.den * Poly((1, 1)))
    assert x2 == x
    assert x2 + z == x + z
    assert x2 * z == x * z
    assert (x + y) * z == x * z + y * z


def test_poly_gcd_is_monic():
    g = poly_gcd((t - 1) * (t + 2) * 3, (t - 1) * (t + 5))
    assert g == t - 1


ALGEBRAS = [
    ScalarAlgebra(),
    ScalarAlgebra(GF(5)),
    DiagonalAlgebra(["p", "q", "r"]),
    PolynomialAlgebra(),
    MatrixAlgebra(3),
    LocalRationalAlgebra(),
    Unitization(A0Algebra()),
]


@pytest.mark.parametrize("A", ALGEBRAS, ids=lambda A: type(A).__name__)
def test_idempotent_family(A):
    assert A.idempotent_violations() == []
    assert A.one * A.one == A.one


@pytest.mark.parametrize("A", ALGEBRAS, ids=lambda A: type(A).__name__)
def test_coefficient_ring_axioms(A):
    rng = random.Random(1)
    for _ in range(20):
        x, y, z = (A.random_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert A.one * x == x == x * A.one
        assert A.is_zero(x - x)


def test_bad_idempotent_family_is_reported():
    A = MatrixAlgebra(2)
    A.idempotents = {"E11": A.unit(0, 0), "X": A.unit(0, 0) + A.unit(0, 1)}
    assert A.idempotent_violations()


def test_unitization_adjoins_unit():
    U = Unitization(A0Algebra())
    a = U.embed(RationalFunction(t))
    assert U.one * a == a
    assert U.parse("1") == U.one


def test_local_rational_generators():
    A = LocalRationalAlgebra()
    gens = A.generators(4)
    assert gens[0] == RationalFunction(t)
    assert all(a0_membership(g) for g in gens)
    assert len(set(gens)) == 4
    dens = [g for _, g in zip(range(10), enumerate_unit_denominators())]
    assert all(g.at_zero() == 1 for g in dens)
    assert A.parse("a1") == gens[1]


def test_local_rational_vectorize_is_linear():
    A = LocalRationalAlgebra()
    x, y = rf((0, 1), (1, 1)), rf((0, 2), (1, -1))
    vx, vy, vs = A.vectorize([x, y, x + y])
    total = {k: vx.get(k, 0) + vy.get(k, 0) for k in set(vx) | set(vy)}
    assert {k: v for k, v in total.items() if v} == vs


def test_gf_element_repr():
    assert str(GFElement(7, 5)) == "2"
