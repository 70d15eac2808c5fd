from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_rationals
from orthoinvert.exactnum import ArityError, ZeroDenominator, binom_rat
from orthoinvert.families import FamilySpec, charlier, laguerre
from orthoinvert.identities import check_monomial_expansion
from orthoinvert.inversion import (
    build_inversion_matrices,
    charlier_inversion_check,
    charlier_inversion_sum,
    gen_laguerre_sum,
    is_inversion_pair,
    jacobi_diagonal_check,
    jacobi_inversion_check,
    jacobi_product_formula,
    jacobi_product_sum,
    laguerre_convolution_check,
    laguerre_inversion_check,
    matrix_residual,
)
from orthoinvert.poly import X, Poly, evaluate, reflect


def test_charlier_examples():
    assert charlier_inversion_check(4, 4, F(2, 9)).passed
    assert reflect(charlier(1, -3)) + charlier(1, 3) == Poly()
    assert charlier_inversion_sum(2, 1, 3) == Poly()
    assert charlier_inversion_check(5, 1, F(2, 3)).passed
    with pytest.raises(ArityError):
        charlier_inversion_check(1, 2, 0)


def test_laguerre_examples():
    assert laguerre_inversion_check(3, 3, 7).passed
    alpha, j = F(1, 5), 2
    assert laguerre(1, alpha + j) + reflect(laguerre(1, -alpha - j - 2)) == Poly()
    r = laguerre_inversion_check(6, 2, F(-1, 2))
    assert r.passed and r.identity == "Eq30"


def test_gen_laguerre_examples():
    alpha, q = F(3, 7), F(2, 3)
    p = q - 1
    r = gen_laguerre_sum(1, alpha, p, q)
    assert r.passed
    assert gen_laguerre_sum(3, 0, 0, 2).passed and is_inversion_pair(3, 0, 2)
    assert gen_laguerre_sum(0, F(1, 3), 5, -2).passed
    assert not is_inversion_pair(3, 0, F(1, 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), small_rationals, small_rationals, small_rationals)
def test_gen_laguerre_constant_in_x(n, alpha, p, q):
    assert gen_laguerre_sum(n, alpha, p, q).passed


def test_gen_laguerre_window():
    for n in range(1, 9):
        for d in range(-n - 3, 3):
            zero = -n - 1 <= d <= -2
            assert is_inversion_pair(n, d, 0) == zero
            assert gen_laguerre_sum(n, F(1, 4), d, 0).passed


@pytest.mark.parametrize("alpha, beta", [(F(0), F(0)), (F(1, 2), F(-1, 3)), (F(5, 3), F(7, 4)), (F(-1, 4), F(-2, 5))])
def test_jacobi_inversion(alpha, beta):
    for i in range(8):
        for j in range(i + 1):
            for variant in ("Delta31", "Monomial37"):
                assert jacobi_inversion_check(i, j, alpha, beta, variant).passed


def test_jacobi_inversion_examples():
    r = jacobi_inversion_check(7, 3, F(1, 2), F(-1, 3))
    assert r.passed and r.identity == "Eq31"
    assert jacobi_inversion_check(2, 2, F(1, 2), F(1, 2)).identity == "Eq46"
    assert jacobi_inversion_check(3, 1, F(1, 2), F(1, 2), "Monomial37").identity == "Eq49"
    with pytest.raises(ZeroDenominator):
        jacobi_inversion_check(3, 0, F(-1), F(-1))
    with pytest.raises(ArityError):
        jacobi_inversion_check(3, 0, 0, 0, "Other")


def test_product_formula_examples():
    assert jacobi_product_formula(0, F(2, 3), F(1, 5), F(9)).passed
    y0 = F(3, 7)
    assert jacobi_product_sum(1, 0, 0, y0) == Poly([-y0 / 2, F(1, 2)])
    assert jacobi_product_formula(4, F(1, 3), F(-1, 4), F(2, 5)).passed
    with pytest.raises(ZeroDenominator):
        jacobi_product_formula(2, F(-1), F(-1), 0)


def test_product_formula_bivariate():
    # n+1 distinct y values certify a degree-n identity in y
    alpha, beta = F(2, 5), F(-1, 6)
    for n in range(7):
        for t in range(n + 1):
            assert jacobi_product_formula(n, alpha, beta, F(t, 3) - 1).passed


def test_diagonal():
    for n in range(10):
        assert jacobi_diagonal_check(n, F(1, 3), F(3, 4)).passed
    assert jacobi_product_sum(0, 1, 1, X) == Poly([1])


def test_convolution_examples():
    assert laguerre_convolution_check(0, 1, 2, 3).passed
    assert laguerre_convolution_check(3, F(1, 2), F(-1, 4), F(1, 3)).passed
    for n in range(8):
        assert laguerre_convolution_check(n, F(2, 7), 0, F(-5, 3), "Eq57").passed


def test_convolution_reduces_to_monomial_expansion():
    # y0 = 0 gives the monomial expansion up to a sign
    alpha = F(3, 5)
    for n in range(8):
        assert laguerre_convolution_check(n, alpha, 0, 0, "Eq57").passed
        assert check_monomial_expansion("Laguerre7", n, alpha).passed
        for k in range(n + 1):
            v = evaluate(laguerre(n - k, -n - alpha - 1), 0)
            assert v == (-1) ** (n + k) * binom_rat(n + alpha, n - k)


def test_matrix_examples():
    pair = build_inversion_matrices(FamilySpec.laguerre(0), 1, 2)
    assert pair.T == ((1, 0), (-1, 1))
    assert pair.U == ((1, 0), (1, 1))
    assert pair.is_inverse()
    pair = build_inversion_matrices(FamilySpec.charlier(1), 4, F(3, 2))
    assert all(pair.T[r][r] == 1 == pair.U[r][r] for r in range(5))
    assert pair.is_inverse()
    assert all(v == 0 for row in matrix_residual(pair) for v in row)
    assert build_inversion_matrices(FamilySpec.laguerre(0), 1, 2).to_json() == {
        "T": [["1", "0"], ["-1", "1"]],
        "U": [["1", "0"], ["1", "1"]],
    }
    with pytest.raises(ArityError):
        build_inversion_matrices(FamilySpec.jacobi(0, 0), 2, 0)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), small_rationals, small_rationals, st.sampled_from(["Charlier", "Laguerre"]))
def test_matrix_inverse_property(N, p, x0, kind):
    fam = FamilySpec.charlier(p) if kind == "Charlier" else FamilySpec.laguerre(p)
    assert build_inversion_matrices(fam, N, x0).is_inverse()

