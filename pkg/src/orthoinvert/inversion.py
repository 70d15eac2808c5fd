"""Inversion and product formulas for the Charlier, Laguerre and Jacobi families.

Each check assembles a finite bilinear sum of polynomials and compares it
with its closed form.  Gamma quotients are carried as Pochhammer ratios and
a vanishing denominator raises :class:`ZeroDenominator`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactnum import ArityError, RationalLike, ZeroDenominator, pochhammer, rat, rat_str
from .families import FamilySpec, charlier, jacobi, laguerre
from .poly import ONE, X, Poly, evaluate, reflect, shift
from .report import CheckReport


def _delta(i: int, j: int) -> Poly:
    return ONE if i == j else Poly()


def _need_lower(i: int, j: int) -> None:
    if j > i or j < 0:
        raise ArityError(f"need 0 <= j <= i, got i={i}, j={j}")


# Charlier / Laguerre -------------------------------------------------------

def charlier_inversion_sum(i: int, j: int, a: RationalLike) -> Poly:
    a = rat(a)
    out = Poly()
    for k in range(j, i + 1):
        out = out + reflect(charlier(i - k, -a)) * charlier(k - j, a)
    return out


def charlier_inversion_check(i: int, j: int, a: RationalLike) -> CheckReport:
    _need_lower(i, j)
    a = rat(a)
    return CheckReport("Eq33", {"i": i, "j": j, "a": a}, charlier_inversion_sum(i, j, a) - _delta(i, j))


def laguerre_inversion_sum(i: int, j: int, alpha: RationalLike) -> Poly:
    alpha = rat(alpha)
    out = Poly()
    for k in range(i - j + 1):
        out = out + laguerre(k, alpha + j) * reflect(laguerre(i - j - k, -alpha - i - 1))
    return out


def laguerre_inversion_check(i: int, j: int, alpha: RationalLike) -> CheckReport:
    _need_lower(i, j)
    alpha = rat(alpha)
    res = laguerre_inversion_sum(i, j, alpha) - _delta(i, j)
    return CheckReport("Eq30", {"i": i, "j": j, "alpha": alpha}, res)


def gen_laguerre_sum(n: int, alpha: RationalLike, p: RationalLike, q: RationalLike) -> CheckReport:
    """sum_k L_k^(alpha+p)(x) L_{n-k}^(-alpha-q)(-x) against (p-q+2)_n / n!."""
    alpha, p, q = rat(alpha), rat(p), rat(q)
    total = Poly()
    for k in range(n + 1):
        total = total + laguerre(k, alpha + p) * reflect(laguerre(n - k, -alpha - q))
    res = total - Poly.const(pochhammer(p - q + 2, n) / factorial(n))
    return CheckReport("Eq34", {"n": n, "alpha": alpha, "p": p, "q": q}, res)


def is_inversion_pair(n: int, p: RationalLike, q: RationalLike) -> bool:
    """True when (p-q+2)_n = 0, i.e. the generalized sum collapses to zero."""
    return pochhammer(rat(p) - rat(q) + 2, n) == 0


def laguerre_convolution_check(
    n: int, alpha: RationalLike, beta: RationalLike, y0: RationalLike, variant: str = "General"
) -> CheckReport:
    """Laguerre convolution with the second argument bound to ``y0``.

    ``General``: sum_k L_k^(a)(x) L_{n-k}^(b)(y0) = L_n^(a+b+1)(x+y0).
    ``Eq57``:    sum_k L_k^(a)(x) L_{n-k}^(-n-a-1)(-y0) = (y0-x)^n / n!  (beta unused).
    """
    alpha, beta, y0 = rat(alpha), rat(beta), rat(y0)
    total = Poly()
    if variant == "General":
        for k in range(n + 1):
            total = total + laguerre(k, alpha).scale(evaluate(laguerre(n - k, beta), y0))
        res = total - shift(laguerre(n, alpha + beta + 1), y0)
        return CheckReport("LaguerreConvolution", {"n": n, "alpha": alpha, "beta": beta, "y": y0}, res)
    if variant == "Eq57":
        for k in range(n + 1):
            total = total + laguerre(k, alpha).scale(evaluate(laguerre(n - k, -n - alpha - 1), -y0))
        res = total - (Poly.linear(-1, y0) ** n).scale(Fraction(1, factorial(n)))
        return CheckReport("Eq57", {"n": n, "alpha": alpha, "y": y0}, res)
    raise ArityError(f"unknown convolution variant {variant!r}")


# Jacobi ---------------------------------------------------------------------

def _prod_weight(n: int, k: int, s: Fraction) -> Fraction:
    """(s+2k)(s)_k / (s)_{n+k+1} with s = alpha+beta+1."""
    den = pochhammer(s, n + k + 1)
    if not den:
        raise ZeroDenominator(f"({s})_{n + k + 1} = 0")
    return (s + 2 * k) * pochhammer(s, k) / den


def jacobi_product_sum(n: int, alpha: RationalLike, beta: RationalLike, y: RationalLike | Poly) -> Poly:
    """Left side of the product formula, times Gamma(alpha+beta+1).

    ``y`` is either a rational (bound second argument) or a polynomial in x
    that is substituted for the second argument (y = x, y = -x).
    """
    a, b = rat(alpha), rat(beta)
    s = a + b + 1
    out = Poly()
    for k in range(n + 1):
        second = jacobi(n - k, -n - a - 1, -n - b - 1)
        second = second(y) if isinstance(y, Poly) else Poly.const(evaluate(second, y))
        out = out + (jacobi(k, a, b) * second).scale(_prod_weight(n, k, s))
    return out


def jacobi_product_formula(n: int, alpha: RationalLike, beta: RationalLike, y0: RationalLike) -> CheckReport:
    a, b, y0 = rat(alpha), rat(beta), rat(y0)
    rhs = (Poly.linear(Fraction(1, 2), -y0 / 2) ** n).scale(Fraction(1, factorial(n)))
    res = jacobi_product_sum(n, a, b, y0) - rhs
    return CheckReport("Eq35", {"n": n, "alpha": a, "beta": b, "y": y0}, res)


def jacobi_diagonal_check(n: int, alpha: RationalLike, beta: RationalLike) -> CheckReport:
    """Product formula at y = x: 1 for n = 0, the zero polynomial otherwise."""
    a, b = rat(alpha), rat(beta)
    res = jacobi_product_sum(n, a, b, X) - (ONE if n == 0 else Poly())
    return CheckReport("Eq36", {"n": n, "alpha": a, "beta": b}, res)


def jacobi_inversion_weight(i: int, j: int, k: int, s: Fraction) -> Fraction:
    """(s+2k) / (s+k+j)_{i-j+1} with s = alpha+beta+1."""
    den = pochhammer(s + k + j, i - j + 1)
    if not den:
        raise ZeroDenominator(f"({s + k + j})_{i - j + 1} = 0")
    return (s + 2 * k) / den


def jacobi_inversion_sum(
    i: int, j: int, alpha: RationalLike, beta: RationalLike, reflected: bool = False
) -> Poly:
    a, b = rat(alpha), rat(beta)
    s = a + b + 1
    out = Poly()
    for k in range(j, i + 1):
        left = jacobi(i - k, -a - i - 1, -b - i - 1)
        if reflected:
            left = reflect(left)
        out = out + (left * jacobi(k - j, a + j, b + j)).scale(jacobi_inversion_weight(i, j, k, s))
    return out


def jacobi_inversion_check(
    i: int, j: int, alpha: RationalLike, beta: RationalLike, variant: str = "Delta31"
) -> CheckReport:
    """``Delta31``: the sum equals delta_ij.  ``Monomial37``: with the first
    factor reflected it equals x^(i-j)/(i-j)!."""
    _need_lower(i, j)
    a, b = rat(alpha), rat(beta)
    ultra = a == b
    params = {"i": i, "j": j, "alpha": a, "beta": b}
    if variant == "Delta31":
        res = jacobi_inversion_sum(i, j, a, b) - _delta(i, j)
        return CheckReport("Eq46" if ultra else "Eq31", params, res)
    if variant == "Monomial37":
        rhs = Poly.monomial(i - j, Fraction(1, factorial(i - j)))
        res = jacobi_inversion_sum(i, j, a, b, reflected=True) - rhs
        return CheckReport("Eq49" if ultra else "Eq37", params, res)
    raise ArityError(f"unknown inversion variant {variant!r}")


# Matrix form ---------------------------------------------------------------

@dataclass(frozen=True)
class InversionMatrixPair:
    """Lower-triangular T and its claimed inverse U, entries evaluated at x0."""

    T: tuple[tuple[Fraction, ...], ...]
    U: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.T)

    def product(self) -> list[list[Fraction]]:
        n = self.size
        return [
            [sum((self.U[r][k] * self.T[k][c] for k in range(c, r + 1)), Fraction(0)) for c in range(n)]
            for r in range(n)
        ]

    def is_inverse(self) -> bool:
        n = self.size
        prod = self.product()
        return all(prod[r][c] == (1 if r == c else 0) for r in range(n) for c in range(n))

    def to_json(self) -> dict:
        dump = lambda m: [[rat_str(v) for v in row] for row in m]  # noqa: E731
        return {"T": dump(self.T), "U": dump(self.U)}


def build_inversion_matrices(family: FamilySpec, N: int, x0: RationalLike) -> InversionMatrixPair:
    """(N+1) x (N+1) matrices for a Charlier or Laguerre family spec."""
    kind, x0 = family.kind, rat(x0)
    if kind == "Charlier":
        p = family.params["a"]
        t = lambda r, c: evaluate(charlier(r - c, p), x0)  # noqa: E731
        u = lambda r, c: evaluate(charlier(r - c, -p), -x0)  # noqa: E731
    elif kind == "Laguerre":
        p = family.params["alpha"]
        t = lambda r, c: evaluate(laguerre(r - c, p + c), x0)  # noqa: E731
        u = lambda r, c: evaluate(laguerre(r - c, -p - r - 1), -x0)  # noqa: E731
    else:
        raise ArityError(f"no inversion matrices for {kind!r}")
    zero = Fraction(0)
    T = tuple(tuple(t(r, c) if c <= r else zero for c in range(N + 1)) for r in range(N + 1))
    U = tuple(tuple(u(r, c) if c <= r else zero for c in range(N + 1)) for r in range(N + 1))
    return InversionMatrixPair(T, U)


def matrix_residual(pair: InversionMatrixPair) -> Sequence[Sequence[Fraction]]:
    prod = pair.product()
    n = pair.size
    return [[prod[r][c] - (1 if r == c else 0) for c in range(n)] for r in range(n)]
