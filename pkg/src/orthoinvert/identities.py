"""Residual checkers for the structural Laguerre/Jacobi identities.

Every checker builds both sides exactly and returns a :class:`CheckReport`
whose residual (LHS - RHS) must be the zero polynomial.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial

from .exactnum import ArityError, DomainError, RationalLike, binom_rat, pochhammer, rat, safe_div
from .families import (
    FamilySpec,
    _HALF_1MX,
    _HALF_XM1,
    jacobi,
    jacobi_reversed_sum,
    jacobi_two_point_sum,
    laguerre,
)
from .poly import X, Poly, differentiate, reflect
from .report import CheckReport


class IdentityId(str, Enum):
    DerivLaguerre = "Eq5"
    OdeLaguerre = "Eq6"
    MonomialLaguerre = "Eq7"
    DerivJacobi = "Eq11"
    Symmetry = "Eq12"
    OdeJacobi = "Eq13"
    MonomialJacobi = "Eq14"
    MonomialJacobiGeneral = "Eq15"
    Rec17 = "Eq17"
    Rec18 = "Eq18"
    Rec19 = "Eq19"
    Rec20 = "Eq20"
    Rec21 = "Eq21"
    Rec22 = "Eq22"


RECURRENCES = (
    IdentityId.Rec17,
    IdentityId.Rec18,
    IdentityId.Rec19,
    IdentityId.Rec20,
    IdentityId.Rec21,
    IdentityId.Rec22,
)


def check_derivative_rule(family: FamilySpec, n: int, i: int) -> CheckReport:
    if not 0 <= i <= n:
        raise ArityError(f"need 0 <= i <= n, got i={i}, n={n}")
    p = family.params
    if family.kind == "Laguerre":
        a = p["alpha"]
        lhs = differentiate(laguerre(n, a), i)
        rhs = laguerre(n - i, a + i).scale((-1) ** i)
        return CheckReport(IdentityId.DerivLaguerre.value, {"n": n, "i": i, "alpha": a}, lhs - rhs)
    if family.kind == "Jacobi":
        a, b = p["alpha"], p["beta"]
        lhs = differentiate(jacobi(n, a, b), i)
        rhs = jacobi(n - i, a + i, b + i).scale(pochhammer(n + a + b + 1, i) / 2**i)
        return CheckReport(
            IdentityId.DerivJacobi.value, {"n": n, "i": i, "alpha": a, "beta": b}, lhs - rhs
        )
    raise ArityError(f"no derivative rule for {family.kind}")


def check_ode(family: FamilySpec, n: int) -> CheckReport:
    p = family.params
    if family.kind == "Laguerre":
        a = p["alpha"]
        y = laguerre(n, a)
        res = X * differentiate(y, 2) + Poly.linear(-1, a + 1) * differentiate(y, 1) + y.scale(n)
        return CheckReport(IdentityId.OdeLaguerre.value, {"n": n, "alpha": a}, res)
    if family.kind == "Jacobi":
        a, b = p["alpha"], p["beta"]
        y = jacobi(n, a, b)
        res = (
            Poly([1, 0, -1]) * differentiate(y, 2)
            + Poly.linear(-(a + b + 2), b - a) * differentiate(y, 1)
            + y.scale(n * (n + a + b + 1))
        )
        return CheckReport(IdentityId.OdeJacobi.value, {"n": n, "alpha": a, "beta": b}, res)
    raise ArityError(f"no second order ODE for {family.kind}")


def check_monomial_expansion(kind: str, n: int, *params: RationalLike) -> CheckReport:
    """Expansion of a monomial in a Laguerre or Jacobi basis.

    ``kind`` is ``"Laguerre7"`` (params: alpha), ``"Jacobi14"`` or
    ``"Jacobi15"`` (params: alpha, beta).  The Jacobi15 form is the one with
    the Gamma quotient replaced by 1/(alpha+beta+1)_{n+k+1}.
    """
    ps = [rat(v) for v in params]
    if kind == "Laguerre7":
        (a,) = ps
        rhs = Poly.monomial(n, Fraction(1, factorial(n)))
        lhs = Poly()
        for k in range(n + 1):
            lhs = lhs + laguerre(k, a).scale((-1) ** k * binom_rat(n + a, n - k))
        return CheckReport(IdentityId.MonomialLaguerre.value, {"n": n, "alpha": a}, rhs - lhs)
    if kind not in ("Jacobi14", "Jacobi15"):
        raise ArityError(f"unknown monomial expansion {kind!r}")
    a, b = ps
    rhs = _HALF_1MX**n
    lhs = Poly()
    if kind == "Jacobi14":
        if a + b + 1 <= 0:
            raise DomainError("the restricted expansion needs alpha + beta + 1 > 0")
        for k in range(n + 1):
            c = pochhammer(-n, k) * pochhammer(a + k + 1, n - k) * (a + b + 2 * k + 1)
            c = safe_div(c, pochhammer(a + b + k + 1, n + 1), f"({a + b + k + 1})_{n + 1} = 0")
            lhs = lhs + jacobi(k, a, b).scale(c)
        ident = IdentityId.MonomialJacobi
    else:
        for k in range(n + 1):
            c = pochhammer(-n, k) * pochhammer(a + b + 1, k) * pochhammer(a + k + 1, n - k)
            c *= a + b + 2 * k + 1
            c = safe_div(c, pochhammer(a + b + 1, n + k + 1), f"({a + b + 1})_{n + k + 1} = 0")
            lhs = lhs + jacobi(k, a, b).scale(c)
        ident = IdentityId.MonomialJacobiGeneral
    return CheckReport(ident.value, {"n": n, "alpha": a, "beta": b}, rhs - lhs)


def check_symmetry(n: int, alpha: RationalLike, beta: RationalLike) -> CheckReport:
    a, b = rat(alpha), rat(beta)
    res = reflect(jacobi(n, a, b)) - jacobi(n, b, a).scale((-1) ** n)
    return CheckReport(IdentityId.Symmetry.value, {"n": n, "alpha": a, "beta": b}, res)


def check_recurrence(ident: IdentityId | str, n: int, alpha: RationalLike, beta: RationalLike) -> CheckReport:
    ident = IdentityId(ident)
    a, b = rat(alpha), rat(beta)
    if ident not in RECURRENCES:
        raise ArityError(f"{ident.value} is not a recurrence")
    low = 1 if ident in (IdentityId.Rec17, IdentityId.Rec18, IdentityId.Rec19) else 2
    if n < low:
        raise ArityError(f"{ident.value} needs n >= {low}")
    if low == 2 and a != b:
        raise ArityError(f"{ident.value} is an ultraspherical relation; needs beta == alpha")
    P = jacobi
    if ident is IdentityId.Rec17:
        res = (X - 1) * differentiate(P(n, a, b)) - (P(n, a, b).scale(n) - P(n - 1, a, b + 1).scale(n + a))
    elif ident is IdentityId.Rec18:
        res = (X + 1) * differentiate(P(n, a, b)) - (P(n, a, b).scale(n) + P(n - 1, a + 1, b).scale(n + b))
    elif ident is IdentityId.Rec19:
        res = P(n, a + 1, b) - P(n, a, b + 1) - P(n - 1, a + 1, b + 1)
    elif ident is IdentityId.Rec20:
        res = (2 * X) * differentiate(P(n, a, a)) - (
            P(n, a, a).scale(2 * n) + P(n - 2, a + 1, a + 1).scale(n + a)
        )
    elif ident is IdentityId.Rec21:
        res = (
            P(n, a + 1, a + 1).scale((n + 2 * a + 1) * (n + 2 * a + 2))
            - P(n - 2, a + 1, a + 1).scale((n + a) * (n + a + 1))
            - P(n, a, a).scale(2 * (n + a + 1) * (2 * n + 2 * a + 1))
        )
    else:
        res = (
            P(n, a + 1, a + 1).scale(a + 1)
            - P(n, a, a).scale(n + a + 1)
            - (Poly([1, 0, -1]) * P(n - 2, a + 2, a + 2)).scale((n + a + 1) / Fraction(4))
        )
    return CheckReport(ident.value, {"n": n, "alpha": a, "beta": b}, res)


def check_jacobi_definitions(n: int, alpha: RationalLike, beta: RationalLike) -> list[CheckReport]:
    """Canonical constructor against the two alternative explicit sums."""
    a, b = rat(alpha), rat(beta)
    p = jacobi(n, a, b)
    params = {"n": n, "alpha": a, "beta": b}
    return [
        CheckReport("Eq8=Eq9", params, p - jacobi_reversed_sum(n, a, b)),
        CheckReport("Eq8=Eq10", params, p - jacobi_two_point_sum(n, a, b)),
    ]


def check_laguerre_degenerate_monomial(n: int) -> CheckReport:
    res = laguerre(n, -n) - Poly.monomial(n, Fraction((-1) ** n, factorial(n)))
    return CheckReport("Eq56", {"n": n}, res)


def check_jacobi_degenerate_monomial(n: int, beta: RationalLike) -> CheckReport:
    """P_n^(-n, beta) = C(n+beta, n) ((x-1)/2)^n."""
    b = rat(beta)
    res = jacobi(n, -n, b) - (_HALF_XM1**n).scale(binom_rat(n + b, n))
    return CheckReport("JacobiMonomial", {"n": n, "beta": b}, res)


def jacobi_value_at_one(n: int, alpha: RationalLike) -> Fraction:
    """(alpha+1)_n / n!, the normalization at x = 1."""
    return pochhammer(rat(alpha) + 1, n) / factorial(n)

