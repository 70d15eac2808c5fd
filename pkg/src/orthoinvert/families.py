"""Constructors for the classical families as exact polynomials.

The Jacobi constructor uses the ``(x-1)/2`` power-sum representation; the
two alternative sums (:func:`jacobi_reversed_sum`, :func:`jacobi_two_point_sum`)
exist only as independent oracles for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .exactnum import DomainError, RationalLike, binom_rat, pochhammer, rat, rat_str
from .poly import ONE, X, Poly, differentiate

KINDS = ("Jacobi", "Laguerre", "Charlier", "GenUltra")
_PARAM_NAMES = {
    "Jacobi": ("alpha", "beta"),
    "Laguerre": ("alpha",),
    "Charlier": ("a",),
    "GenUltra": ("alpha", "M"),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        names = _PARAM_NAMES[self.kind]
        if set(self.params) != set(names):
            raise ValueError(f"{self.kind} takes parameters {names}, got {tuple(self.params)}")
        params = {k: rat(self.params[k]) for k in names}
        object.__setattr__(self, "params", params)
        if self.kind == "GenUltra":
            _check_gen_ultra(params["alpha"], params["M"])

    def __hash__(self) -> int:
        return hash((self.kind, tuple(sorted(self.params.items()))))

    @classmethod
    def jacobi(cls, alpha, beta) -> "FamilySpec":
        return cls("Jacobi", {"alpha": alpha, "beta": beta})

    @classmethod
    def laguerre(cls, alpha) -> "FamilySpec":
        return cls("Laguerre", {"alpha": alpha})

    @classmethod
    def charlier(cls, a) -> "FamilySpec":
        return cls("Charlier", {"a": a})

    @classmethod
    def gen_ultra(cls, alpha, M) -> "FamilySpec":
        return cls("GenUltra", {"alpha": alpha, "M": M})

    def poly(self, n: int) -> Poly:
        p = self.params
        if self.kind == "Jacobi":
            return jacobi(n, p["alpha"], p["beta"])
        if self.kind == "Laguerre":
            return laguerre(n, p["alpha"])
        if self.kind == "Charlier":
            return charlier(n, p["a"])
        return gen_ultraspherical(n, p["alpha"], p["M"])

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": {k: rat_str(v) for k, v in self.params.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        return cls(data["kind"], {k: rat(v) for k, v in data["params"].items()})


def _check_gen_ultra(alpha: Fraction, M: Fraction) -> None:
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if M < 0:
        raise DomainError(f"M must be nonnegative, got {M}")


_HALF_XM1 = Poly.linear(Fraction(1, 2), Fraction(-1, 2))  # (x-1)/2
_HALF_1MX = Poly.linear(Fraction(-1, 2), Fraction(1, 2))  # (1-x)/2


def _powers(p: Poly, n: int) -> list[Poly]:
    out = [ONE]
    for _ in range(n):
        out.append(out[-1] * p)
    return out


def jacobi(n: int, alpha: RationalLike, beta: RationalLike) -> Poly:
    """P_n^(alpha, beta)(x), valid for every rational alpha and beta."""
    return _jacobi(n, rat(alpha), rat(beta))


@lru_cache(maxsize=8192)
def _jacobi(n: int, alpha: Fraction, beta: Fraction) -> Poly:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    s = n + alpha + beta + 1
    out = Poly()
    for k, u in enumerate(_powers(_HALF_XM1, n)):
        c = pochhammer(s, k) * pochhammer(alpha + k + 1, n - k) / (factorial(k) * factorial(n - k))
        out = out + u.scale(c)
    return out


def jacobi_reversed_sum(n: int, alpha: RationalLike, beta: RationalLike) -> Poly:
    """Oracle: (-1)^n sum_k (-n-k-a-b)_k (-n-a)_{n-k} / (k!(n-k)!) ((x-1)/2)^k."""
    alpha, beta = rat(alpha), rat(beta)
    out = Poly()
    for k, u in enumerate(_powers(_HALF_XM1, n)):
        c = pochhammer(-n - k - alpha - beta, k) * pochhammer(-n - alpha, n - k)
        out = out + u.scale(c / (factorial(k) * factorial(n - k)))
    return out.scale((-1) ** n)


def jacobi_two_point_sum(n: int, alpha: RationalLike, beta: RationalLike) -> Poly:
    """Oracle: 2^-n sum_k C(n+a, n-k) C(n+b, k) (x-1)^k (x+1)^(n-k)."""
    alpha, beta = rat(alpha), rat(beta)
    xm1 = _powers(X - 1, n)
    xp1 = _powers(X + 1, n)
    out = Poly()
    for k in range(n + 1):
        c = binom_rat(n + alpha, n - k) * binom_rat(n + beta, k)
        if c:
            out = out + (xm1[k] * xp1[n - k]).scale(c)
    return out.scale(Fraction(1, 2**n))


@lru_cache(maxsize=4096)
def _laguerre(n: int, alpha: Fraction) -> Poly:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return Poly(
        (-1) ** k * binom_rat(n + alpha, n - k) / factorial(k) for k in range(n + 1)
    )


def laguerre(n: int, alpha: RationalLike) -> Poly:
    """L_n^(alpha)(x) = sum_k (-1)^k C(n+alpha, n-k) x^k / k!."""
    return _laguerre(n, rat(alpha))


def falling_binomial(k: int) -> Poly:
    """C(x, k) = x(x-1)...(x-k+1)/k! as a polynomial in x."""
    out = ONE
    for j in range(k):
        out = out * Poly.linear(1, -j)
    return out.scale(Fraction(1, factorial(k)))


@lru_cache(maxsize=4096)
def _charlier(n: int, a: Fraction) -> Poly:
    # t^n coefficient of (sum_m (-a t)^m / m!) * (sum_k C(x, k) t^k), both truncated at t^n
    out = Poly()
    for k in range(n + 1):
        out = out + falling_binomial(k).scale((-a) ** (n - k) / factorial(n - k))
    return out


def charlier(n: int, a: RationalLike) -> Poly:
    """Charlier polynomial from the generating function e^{-at}(1+t)^x."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _charlier(n, rat(a))


def gen_ultra_constants(n: int, alpha: RationalLike, M: RationalLike) -> tuple[Fraction, Fraction]:
    """The pair (C0, C1) mixing P_n and x D P_n for the point-mass weight."""
    alpha, M = rat(alpha), rat(M)
    _check_gen_ultra(alpha, M)
    if not M:
        return Fraction(1), Fraction(0)
    c0 = (
        1
        + 2 * M * n / (alpha + 1) * binom_rat(n + 2 * alpha + 1, n)
        + 4 * M**2 * binom_rat(n + 2 * alpha + 1, n - 1) ** 2
    )
    # 2M/(2a+1) C(n+2a, n) has a removable singularity at a = -1/2: it equals
    # 2M (2a+2)_{n-1}/n! for n >= 1 and 2M/(2a+1) only at n = 0, where x D P_0 = 0.
    first = 2 * M * pochhammer(2 * alpha + 2, n - 1) / factorial(n) if n >= 1 else Fraction(0)
    c1 = first + 2 * M**2 / (alpha + 1) * binom_rat(n + 2 * alpha, n - 1) * binom_rat(
        n + 2 * alpha + 1, n
    )
    return c0, c1


def gen_ultraspherical(n: int, alpha: RationalLike, M: RationalLike) -> Poly:
    """Symmetric generalized ultraspherical polynomial C0 P_n - C1 x D P_n."""
    alpha, M = rat(alpha), rat(M)
    c0, c1 = gen_ultra_constants(n, alpha, M)
    p = jacobi(n, alpha, alpha)
    return p.scale(c0) - (X * differentiate(p, 1)).scale(c1)
