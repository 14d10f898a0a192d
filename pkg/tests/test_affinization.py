import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpa_wreath.affinization import (
    BandedOperator,
    affine_span,
    banded_mul,
    dense_window_product,
    loop_wreath,
    non_nil_witness,
    prop3_check,
    prop3_witness,
    radical_matrix_quasi_inverse,
    radical_probe,
    relations_check,
)
from lpa_wreath.affinization.loop import generator_letters
from lpa_wreath.affinization.radical import quasi_inverse_defects
from lpa_wreath.coefficients import LocalRationalAlgebra, MatrixAlgebra, ScalarAlgebra
from lpa_wreath.polynomials import Poly, RationalFunction
from lpa_wreath.wreath import wreath_mul

F = ScalarAlgebra()
t = RationalFunction(Poly.t())
zero = RationalFunction(Poly(()))


def random_op(rng, A, band=2, n_corr=3):
    diags = {}
    for d in range(-band, band + 1):
        if rng.random() < 0.6:
            coeffs = [A.random_element(rng) for _ in range(3)]
            diags[d] = lambda i, coeffs=coeffs: coeffs[i % 3]
    corr = {(rng.randrange(6), rng.randrange(6)): A.random_element(rng) for _ in range(n_corr)}
    return BandedOperator(A, diags, corr)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_banded_mul_matches_dense(seed, n):
    rng = random.Random(seed)
    A = F if seed % 2 else MatrixAlgebra(2)
    x, y = random_op(rng, A), random_op(rng, A)
    inner = n + x.bandwidth + y.bandwidth + 8
    assert banded_mul(x, y).window(n) == dense_window_product(x, y, n, inner)


def test_diagonal_product():
    x = BandedOperator.diagonal(F, lambda i: Fraction(i + 1))
    y = BandedOperator.diagonal(F, lambda i: Fraction(2 * i))
    assert (x * y).window(5) == {(i, i): Fraction((i + 1) * 2 * i) for i in range(1, 5)}


def test_shifts():
    S, T = BandedOperator.shift(F, 1), BandedOperator.shift(F, -1)
    assert (S * T).window(6) == {(i, i): 1 for i in range(1, 6)}
    assert (T * S).window(6) == {(i, i): 1 for i in range(6)}
    assert S.entry(1, 0) == 1 and S.entry(0, 1) == 0


def test_finite_ideal():
    rng = random.Random(4)
    for _ in range(50):
        x = random_op(rng, F)
        m = BandedOperator.finite(F, {(rng.randrange(4), rng.randrange(4)): F.random_element(rng)})
        for prod in (x * m, m * x):
            assert prod.is_finite
            assert prod.equals_on(BandedOperator.finite(F, prod.corrections), 16)
    d = BandedOperator.diagonal(F, lambda i: Fraction(i + 2))
    m = BandedOperator.finite(F, {(1, 2): Fraction(3)})
    assert (d * m).corrections == {(1, 2): Fraction(9)}


def test_relations():
    W = loop_wreath(F)
    results = relations_check(W, 5)
    assert len(results) == 6 and all(ok for _, ok in results)
    # F[t, t^-1] is not closed under the product
    assert W.mul(W.t, W.tinv).op


def test_relations_with_other_entry():
    W = loop_wreath(MatrixAlgebra(2))
    A = W.coeff
    assert all(ok for _, ok in relations_check(W, 3, A.unit(0, 1)))


def test_agrees_with_wreath():
    W = loop_wreath(F)
    B = W.wreath()
    rng = random.Random(6)
    for _ in range(200):
        x, y = B.random_element(rng, max_index=3), B.random_element(rng, max_index=3)
        x = B.element(dict(x.L), {k: a for k, a in x.M.items() if "0" not in (str(k[0]), str(k[1]))})
        y = B.element(dict(y.L), {k: a for k, a in y.M.items() if "0" not in (str(k[0]), str(k[1]))})
        ax, ay = W.from_wreath(x), W.from_wreath(y)
        prod = W.mul(ax, ay)
        assert W.to_wreath(prod, B) == wreath_mul(x, y)
        assert W.from_wreath(wreath_mul(x, y)) == prod


def test_affine_span():
    W = loop_wreath(F)
    basis, span = affine_span(W, [W.t, W.tinv], 2)
    for x in (W.v, W.t, W.laurent_monomial(2), W.tinv, W.laurent_monomial(-2), W.e00()):
        assert span.contains(x)
    assert not span.contains(W.laurent_monomial(3))
    basis, _ = affine_span(W, [W.t], 0)
    assert basis == []
    basis, _ = affine_span(W, [W.e00()], 3)
    assert basis == [W.e00()]
    with pytest.raises(ValueError):
        affine_span(W, [W.t], 9)


def test_prop3_witness():
    A = LocalRationalAlgebra()
    W = loop_wreath(A)
    letters = generator_letters(W, A.generator)
    assert prop3_witness(W, [0], 0, 0) == ["E00", "a", "E00"]
    assert prop3_witness(W, [], 1, 0) == ["t", "E00"]
    word = prop3_witness(W, [2, 1], 0, 3)
    assert word == ["E00", "tinv", "tinv", "a"] + ["t", "t", "E00", "tinv", "a", "t", "E00", "tinv", "tinv", "tinv"]
    assert W.evaluate(word, letters) == W.unit(A.generator(2) * A.generator(1), 0, 3)
    assert W.evaluate(["t", "E00"], letters) == W.unit(A.one, 1, 0)


def test_prop3_check():
    A = LocalRationalAlgebra()
    W = loop_wreath(A)
    rep = prop3_check(W, 3, 3)
    assert rep, str(rep)
    rep = prop3_check(W, 1, 2)
    assert rep and any("within 1 generators" in s for s in rep.lines)
    corrupted = lambda i: A.zero if i == 0 else A.generator(i)
    rep = prop3_check(W, 3, 3, a_diag=corrupted)
    assert not rep
    assert "(a0)_{0,0}" in rep.failures[0]


def test_radical_examples():
    [[y]] = radical_matrix_quasi_inverse([[t]])
    assert y == RationalFunction(-Poly.t(), 1 + Poly.t())
    assert radical_matrix_quasi_inverse([[zero, zero], [zero, zero]]) == [[zero, zero], [zero, zero]]
    m = [[zero, t], [zero, zero]]
    y = radical_matrix_quasi_inverse(m)
    assert y == [[zero, -t], [zero, zero]]
    left, right = quasi_inverse_defects(m, y, zero)
    assert not any(a for row in left + right for a in row)
    with pytest.raises(ValueError):
        radical_matrix_quasi_inverse([[RationalFunction(Poly((1,)))]])


def test_radical_probe_small():
    assert radical_probe(40, 15, seed=3)


def test_non_nil():
    W = loop_wreath(LocalRationalAlgebra())
    assert non_nil_witness(W, 8)
