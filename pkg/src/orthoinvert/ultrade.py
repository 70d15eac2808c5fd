"""Coefficients of the infinite-order DE for symmetric generalized ultraspherical polynomials.

The DE reads

    M sum_i a_i(x) y^(i) + (1-x^2) y'' - 2(alpha+1) x y' + n(n+2alpha+1) y = 0,

with a_0 = a_0(n, alpha) a constant depending on the degree, and
a_i = a01 * b_i + c_i for i >= 1, where a01 = a_0(1, alpha) is free.

The a_i are produced three ways: closed forms, the inversion solver applied
to the shifted system in the (alpha+1, alpha+1) basis, and the inversion
solver applied to the unshifted system (explicit b/c sums).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict

from .exactnum import DomainError, RationalLike, binom_rat, pochhammer, rat, rat_str
from .families import gen_ultraspherical, jacobi
from .hypersum import sum_1f0_partial
from .inversion import jacobi_inversion_weight
from .poly import X, Poly, differentiate, latex
from .report import CheckReport
from .solver import TriangularSystem, solve_triangular

_ONE_MINUS_X2 = Poly([1, 0, -1])


def _check_alpha(alpha: Fraction) -> None:
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")


def binom_over_2a1(n: int, alpha: Fraction) -> Fraction:
    """C(n+2alpha, n) / (2alpha+1), continued through alpha = -1/2 for n >= 1."""
    if n == 0:
        return 1 / (2 * alpha + 1)
    return pochhammer(2 * alpha + 2, n - 1) / factorial(n)


def _scaled_d2(p: Poly, n: int, alpha: Fraction) -> Poly:
    """4 C(n+2alpha, n)/(2alpha+1) D^2 p for p of degree n; zero below degree 2."""
    if n < 2:
        return Poly()
    return differentiate(p, 2).scale(4 * binom_over_2a1(n, alpha))


# a_0 --------------------------------------------------------------------------

def b0(n: int) -> Fraction:
    return Fraction(1 - (-1) ** n, 2)


def c0(n: int, alpha: RationalLike) -> Fraction:
    alpha = rat(alpha)
    return 4 * (2 * alpha + 3) * binom_rat(n + 2 * alpha + 2, n - 2)


def a0_sequence(alpha: RationalLike, a01: RationalLike, n_max: int) -> Dict[int, Fraction]:
    """a_0(n) = a01 * b_0(n) + c_0(n) for 0 <= n <= n_max."""
    alpha, a01 = rat(alpha), rat(a01)
    _check_alpha(alpha)
    return {n: a01 * b0(n) + c0(n, alpha) for n in range(n_max + 1)}


def a0_by_recurrence(alpha: RationalLike, a01: RationalLike, n_max: int) -> Dict[int, Fraction]:
    """Same sequence from a_0(0)=0, a_0(1)=a01 and the step-two recurrence."""
    alpha, a01 = rat(alpha), rat(a01)
    _check_alpha(alpha)
    out = {0: Fraction(0), 1: a01}
    for n in range(n_max - 1):
        out[n + 2] = out[n] + 4 * (2 * n + 2 * alpha + 3) * binom_rat(n + 2 * alpha + 2, n)
    return {n: out[n] for n in range(n_max + 1)}


def parity_sum(alpha: RationalLike, n: int, odd: bool) -> Fraction:
    """sum_{k<n} C(m+2a+2, m)(2m+2a+3) over m = 2k (even) or m = 2k+1 (odd)."""
    alpha = rat(alpha)
    total = Fraction(0)
    for k in range(n):
        m = 2 * k + odd
        total += binom_rat(m + 2 * alpha + 2, m) * (2 * m + 2 * alpha + 3)
    return total


def parity_sum_closed(alpha: RationalLike, n: int, odd: bool) -> Fraction:
    alpha = rat(alpha)
    return (2 * alpha + 3) * binom_rat(2 * n + 2 * alpha + 2 + odd, 2 * n - 2 + odd)


def parity_sum_via_1f0(alpha: RationalLike, n: int, odd: bool) -> Fraction:
    """Merge the parity sum into sum_{k<=m} (2a+3)_{k+1}/k!, then close it with the 1F0 partial sum."""
    alpha = rat(alpha)
    top = 2 * n - 2 + odd
    merged = sum((pochhammer(2 * alpha + 3, k + 1) / factorial(k) for k in range(top + 1)), Fraction(0))
    if merged != parity_sum(alpha, n, odd):
        raise AssertionError("merged parity sum disagrees with the direct sum")
    return (2 * alpha + 3) * sum_1f0_partial(2 * alpha + 3, top).rhs


def parity_sum_telescoped(alpha: RationalLike, n: int, odd: bool) -> Fraction:
    """Telescope (2m+2a+3) C(m+2a+2, m) = (2a+3)[C(m+2a+4, m) - C(m+2a+2, m-2)]."""
    alpha = rat(alpha)
    total = Fraction(0)
    for k in range(n):
        m = 2 * k + odd
        piece = (2 * alpha + 3) * (binom_rat(m + 2 * alpha + 4, m) - binom_rat(m + 2 * alpha + 2, m - 2))
        if piece != (2 * m + 2 * alpha + 3) * binom_rat(m + 2 * alpha + 2, m):
            raise AssertionError(f"telescoping split fails at m={m}")
        total += piece
    return total


# closed forms for b_i, c_i ----------------------------------------------------

def bc_closed_form(alpha: RationalLike, i: int) -> tuple[Poly, Poly]:
    alpha = rat(alpha)
    _check_alpha(alpha)
    if i < 1:
        raise ValueError("i must be positive")
    b = Poly.monomial(i, Fraction(2 ** (i - 1) * (-1) ** i, factorial(i)))
    if i == 1:
        return b, Poly()
    c = (_ONE_MINUS_X2 * jacobi(i - 2, alpha - i + 3, alpha - i + 3)).scale(
        (2 * alpha + 3) * Fraction(2**i, factorial(i))
    )
    return b, c


def closed_form_coeffs(alpha: RationalLike, a01: RationalLike, i_max: int) -> Dict[int, Poly]:
    a01 = rat(a01)
    out = {}
    for i in range(1, i_max + 1):
        b, c = bc_closed_form(alpha, i)
        out[i] = b.scale(a01) + c
    return out


# inversion routes -------------------------------------------------------------

def shifted_rhs(n: int, alpha: Fraction, a0: Dict[int, Fraction]) -> Poly:
    """F_n of the shifted system in the (alpha+1, alpha+1) basis."""
    lead = 8 * binom_rat(n + 2 * alpha + 2, n) / (n + alpha + 2)
    return differentiate(jacobi(n + 2, alpha, alpha), 2).scale(lead) - jacobi(n, alpha + 1, alpha + 1).scale(a0[n + 2])


def unshifted_rhs(n: int, alpha: Fraction, a0: Dict[int, Fraction]) -> Poly:
    p = jacobi(n, alpha, alpha)
    return _scaled_d2(p, n, alpha) - p.scale(a0[n])


def coeffs_via_inversion(
    alpha: RationalLike, a01: RationalLike, i_max: int, route: str = "System54"
) -> Dict[int, Poly]:
    """a_1..a_i_max from the inversion solver.

    ``System54`` solves the shifted system in the (alpha+1, alpha+1) basis.
    ``System52`` evaluates the explicit b/c sums for the unshifted system.
    """
    alpha, a01 = rat(alpha), rat(a01)
    _check_alpha(alpha)
    if route == "System54":
        a0 = a0_sequence(alpha, a01, i_max + 2)
        F = tuple(shifted_rhs(n, alpha, a0) for n in range(1, i_max + 1))
        A = solve_triangular(TriangularSystem(alpha + 1, alpha + 1, F))
        return {i: A[i - 1] for i in range(1, i_max + 1)}
    if route == "System52":
        return {i: b.scale(a01) + c for i, (b, c) in unshifted_bc(alpha, i_max).items()}
    raise ValueError(f"unknown route {route!r}")


def shifted_f0(alpha: RationalLike, a01: RationalLike = 0) -> Poly:
    alpha = rat(alpha)
    return shifted_rhs(0, alpha, a0_sequence(alpha, a01, 2))


def unshifted_bc(alpha: RationalLike, i_max: int) -> Dict[int, tuple[Poly, Poly]]:
    """b_i and c_i from the explicit sums over the unshifted basis."""
    alpha = rat(alpha)
    _check_alpha(alpha)
    s = 2 * alpha + 1
    out = {}
    for i in range(1, i_max + 1):
        b, c = Poly(), Poly()
        for j in range(1, i + 1):
            w = jacobi_inversion_weight(i, 0, j, s)
            left = jacobi(i - j, -alpha - i - 1, -alpha - i - 1)
            pj = jacobi(j, alpha, alpha)
            if j % 2:
                b = b + (left * pj).scale(-2 * w)
            g = differentiate(pj, 2).scale(binom_over_2a1(j, alpha)) - pj.scale(
                (2 * alpha + 3) * binom_rat(j + 2 * alpha + 2, j - 2)
            )
            c = c + (left * g).scale(w)
        out[i] = (b.scale(Fraction(2 ** (i - 1))), c.scale(2 ** (i + 2)))
    return out


def unshifted_via_solver(alpha: RationalLike, a01: RationalLike, i_max: int) -> Dict[int, Poly]:
    """The unshifted system handed to the generic closed-form solver."""
    alpha, a01 = rat(alpha), rat(a01)
    a0 = a0_sequence(alpha, a01, i_max)
    F = tuple(unshifted_rhs(n, alpha, a0) for n in range(1, i_max + 1))
    A = solve_triangular(TriangularSystem(alpha, alpha, F))
    return {i: A[i - 1] for i in range(1, i_max + 1)}


# identity used to reach the closed form of c_i -------------------------------

def identity_55_check(alpha: RationalLike, i: int) -> CheckReport:
    alpha = rat(alpha)
    _check_alpha(alpha)
    if i < 2:
        raise ValueError("i must be at least 2")
    lhs = Poly()
    for j in range(2, i + 1):
        w = (2 * alpha + 2 * j + 3) / pochhammer(2 * alpha + j + 3, i + 1)
        w *= binom_rat(j + 2 * alpha + 4, j)
        lhs = lhs + (jacobi(i - j, -alpha - i - 2, -alpha - i - 2) * jacobi(j - 2, alpha + 3, alpha + 3)).scale(w)
    rhs = jacobi(i - 2, alpha - i + 3, alpha - i + 3).scale(Fraction(1, factorial(i)))
    return CheckReport("Eq55", {"i": i, "alpha": alpha}, lhs - rhs)


# DE and the raw systems -------------------------------------------------------

@dataclass
class UltraCoeffs:
    alpha: Fraction
    a01: Fraction
    a0: Dict[int, Fraction] = field(default_factory=dict)
    a: Dict[int, Poly] = field(default_factory=dict)
    b: Dict[int, Poly] = field(default_factory=dict)
    c: Dict[int, Poly] = field(default_factory=dict)

    def coeff(self, i: int, n: int) -> Poly:
        """a_i as a polynomial; i = 0 gives the degree-dependent constant a_0(n)."""
        return Poly.const(self.a0[n]) if i == 0 else self.a[i]

    def to_json(self) -> dict:
        top = max(self.a, default=0)
        return {
            "alpha": rat_str(self.alpha),
            "a01": rat_str(self.a01),
            "a0": [rat_str(self.a0[n]) for n in sorted(self.a0)],
            "a": [self.a[i].to_json() for i in range(1, top + 1)],
        }

    def to_latex(self) -> list[str]:
        lines = [f"a_0({n}) = {latex(Poly.const(self.a0[n]))}" for n in sorted(self.a0)]
        lines += [f"a_{{{i}}}(x) = {latex(self.a[i])}" for i in sorted(self.a)]
        return lines


def synthesize(alpha: RationalLike, a01: RationalLike, i_max: int, n_max: int | None = None) -> UltraCoeffs:
    alpha, a01 = rat(alpha), rat(a01)
    n_max = i_max if n_max is None else n_max
    bc = {i: bc_closed_form(alpha, i) for i in range(1, i_max + 1)}
    return UltraCoeffs(
        alpha=alpha,
        a01=a01,
        a0=a0_sequence(alpha, a01, n_max),
        a={i: b.scale(a01) + c for i, (b, c) in bc.items()},
        b={i: b for i, (b, _) in bc.items()},
        c={i: c for i, (_, c) in bc.items()},
    )


def _op_sum(co: UltraCoeffs, p: Poly, n: int, start: int = 0) -> Poly:
    """sum_{i>=start} a_i D^i p, with a_0 = a_0(n)."""
    out = Poly()
    for i in range(start, (p.degree or 0) + 1):
        out = out + co.coeff(i, n) * differentiate(p, i)
    return out


def de_residual(n: int, alpha: RationalLike, M: RationalLike, co: UltraCoeffs) -> Poly:
    alpha, M = rat(alpha), rat(M)
    y = gen_ultraspherical(n, alpha, M)
    classical = (
        _ONE_MINUS_X2 * differentiate(y, 2)
        - (X * differentiate(y, 1)).scale(2 * (alpha + 1))
        + y.scale(n * (n + 2 * alpha + 1))
    )
    return _op_sum(co, y, n).scale(M) + classical


def verify_de(n: int, alpha: RationalLike, M: RationalLike, a01: RationalLike = 0) -> CheckReport:
    alpha, M, a01 = rat(alpha), rat(M), rat(a01)
    if M < 0:
        raise DomainError(f"M must be nonnegative, got {M}")
    co = synthesize(alpha, a01, max(n, 1), n)
    return CheckReport("Eq32", {"n": n, "alpha": alpha, "M": M, "a01": a01}, de_residual(n, alpha, M, co))


def system_check(system: str, n: int, alpha: RationalLike, a01: RationalLike = 0) -> CheckReport:
    """Residual of one raw system at degree n with the closed-form coefficients.

    ``system`` is one of ``"Eq38"``, ``"Eq39"``, ``"Eq50"`` (n >= 2),
    ``"Eq52"`` or ``"Eq53"`` (n >= 2).
    """
    alpha, a01 = rat(alpha), rat(a01)
    _check_alpha(alpha)
    co = synthesize(alpha, a01, max(n, 1), n)
    return _system_residual(system, n, alpha, co)


def _system_residual(system: str, n: int, alpha: Fraction, co: UltraCoeffs) -> CheckReport:
    p = jacobi(n, alpha, alpha)
    d2 = differentiate(p, 2)
    params = {"n": n, "alpha": alpha, "a01": co.a01}
    if system == "Eq38":
        res = _op_sum(co, p, n) - _scaled_d2(p, n, alpha)
    elif system == "Eq39":
        lhs = Poly()
        for i in range(0, n + 1):
            ai = co.coeff(i, n)
            lhs = lhs + (ai * differentiate(p, i)).scale(i) + X * ai * differentiate(p, i + 1)
        res = lhs - d2.scale(4 * binom_rat(n + 2 * alpha + 1, n - 1))
    elif system == "Eq52":
        res = _op_sum(co, p, n, start=1) - unshifted_rhs(n, alpha, co.a0)
    elif system in ("Eq50", "Eq53"):
        if n < 2:
            raise ValueError(f"{system} needs n >= 2")
        q = jacobi(n - 2, alpha + 1, alpha + 1)
        rhs = d2.scale(8 * binom_rat(n + 2 * alpha, n - 2) / (n + alpha))
        if system == "Eq50":
            res = _op_sum(co, q, n) - rhs
        else:
            res = _op_sum(co, q, n, start=1) - (rhs - q.scale(co.a0[n]))
    else:
        raise ValueError(f"unknown system {system!r}")
    return CheckReport(system, params, res)


def unshifted_consistency(alpha: RationalLike, a01: RationalLike, n_max: int) -> list[CheckReport]:
    """Coefficients solved from the shifted system, substituted into the unshifted one."""
    alpha, a01 = rat(alpha), rat(a01)
    a = coeffs_via_inversion(alpha, a01, n_max, "System54")
    co = UltraCoeffs(alpha, a01, a0_sequence(alpha, a01, n_max), a)
    return [_system_residual("Eq52", n, alpha, co) for n in range(n_max + 1)]

