"""Shared oracles and strategies.

The oracles here never touch the package's constructors: polynomials come
from sympy, sums are built term by term from scratch.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import strategies as st

from orthoinvert.exactnum import ZeroDenominator
from orthoinvert.poly import Poly

_x, _t = sp.symbols("x t")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def from_sympy(expr) -> Poly:
    p = sp.Poly(sp.expand(expr), _x)
    coeffs = [0] * (p.degree() + 1) if not p.is_zero else []
    for (k,), c in p.terms():
        c = sp.Rational(c)
        coeffs[k] = Fraction(int(c.p), int(c.q))
    return Poly(coeffs)


def sympy_jacobi(n: int, a: Fraction, b: Fraction) -> Poly:
    return from_sympy(sp.jacobi(n, sp.Rational(a.numerator, a.denominator), sp.Rational(b.numerator, b.denominator), _x))


def sympy_laguerre(n: int, a: Fraction) -> Poly:
    return from_sympy(sp.assoc_laguerre(n, sp.Rational(a.numerator, a.denominator), _x))


def sympy_charlier(n: int, a: Fraction) -> Poly:
    """t^n coefficient of the series of e^{-at}(1+t)^x."""
    a = sp.Rational(a.numerator, a.denominator)
    ser = sp.series(sp.exp(-a * _t) * sp.exp(_x * sp.log(1 + _t)), _t, 0, n + 1).removeO()
    return from_sympy(sp.expand(ser).coeff(_t, n))


def naive_poch(a: Fraction, k: int) -> Fraction:
    return math.prod((a + j for j in range(k)), start=Fraction(1))


def naive_hyper(upper, lower, n: int, weight=None) -> Fraction:
    total = Fraction(0)
    for k in range(n + 1):
        den = math.prod((naive_poch(v, k) for v in lower), start=Fraction(1)) * math.factorial(k)
        if den == 0:
            raise ZeroDenominator("oracle pole")
        num = math.prod((naive_poch(u, k) for u in upper), start=Fraction(1))
        total += num / den * (weight(k) if weight else 1)
    return total


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5, max_den: int = 7) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_poly(rng: random.Random, degree: int) -> Poly:
    return Poly(random_rational(rng, -3, 3, 5) for _ in range(degree + 1))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261016)


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=9)
small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@st.composite
def polys(draw, max_degree: int = 12):
    n = draw(st.integers(0, max_degree))
    return Poly(draw(st.lists(small_rationals, min_size=n, max_size=n)))
