"""Terminating hypergeometric sums evaluated term by term.

Each evaluator returns a :class:`SumCheck` holding the explicit partial sum
and the closed form, computed independently of one another.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .exactnum import RationalLike, ZeroDenominator, pochhammer, rat, rat_str, safe_div


@dataclass(frozen=True)
class SumCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"lhs": rat_str(self.lhs), "rhs": rat_str(self.rhs), "equal": self.equal}


def hyper_terms(
    upper: Sequence[Fraction],
    lower: Sequence[Fraction],
    n: int,
    weight: Callable[[int], Fraction] | None = None,
) -> Fraction:
    """sum_{k=0}^n prod (upper)_k / (prod (lower)_k k!) * weight(k).

    Terms are advanced by their ratio; a lower parameter hitting zero at
    some k <= n is a pole and raises ZeroDenominator even when the matching
    term would have been cancelled by an upper zero.
    """
    term = Fraction(1)
    total = Fraction(0)
    for k in range(n + 1):
        total += term * (weight(k) if weight else 1)
        if k == n:
            break
        num = Fraction(1)
        for u in upper:
            num *= u + k
        den = Fraction(k + 1)
        for v in lower:
            if not v + k:
                raise ZeroDenominator(f"({v})_{k + 1} = 0")
            den *= v + k
        term = term * num / den
    return total


def sum_1f0_partial(a: RationalLike, n: int) -> SumCheck:
    """sum_{k<=n} (a+1)_k / k!  =  (a+2)_n / n!"""
    a = rat(a)
    lhs = hyper_terms([a + 1], [], n)
    return SumCheck(lhs, pochhammer(a + 2, n) / factorial(n))


def vandermonde(b: RationalLike, c: RationalLike, n: int) -> SumCheck:
    """2F1(-n, b; c; 1) = (c-b)_n / (c)_n."""
    b, c = rat(b), rat(c)
    lhs = hyper_terms([Fraction(-n), b], [c], n)
    rhs = safe_div(pochhammer(c - b, n), pochhammer(c, n), f"({c})_{n} = 0")
    return SumCheck(lhs, rhs)


def weighted_zero_sum(b: RationalLike, n: int) -> SumCheck:
    """sum_k (-n)_k (b)_k (b+2k) / ((b+n+1)_k k!) = 0 for n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    b = rat(b)
    lhs = hyper_terms([Fraction(-n), b], [b + n + 1], n, weight=lambda k: b + 2 * k)
    return SumCheck(lhs, Fraction(0))


def saalschutz(a: RationalLike, b: RationalLike, c: RationalLike, n: int) -> SumCheck:
    """3F2(-n, a, n+b+c-1; b, a+c; 1) = (b-a)_n (c)_n / ((b)_n (a+c)_n)."""
    a, b, c = rat(a), rat(b), rat(c)
    lhs = hyper_terms([Fraction(-n), a, n + b + c - 1], [b, a + c], n)
    den = pochhammer(b, n) * pochhammer(a + c, n)
    rhs = safe_div(pochhammer(b - a, n) * pochhammer(c, n), den, "(b)_n (a+c)_n = 0")
    return SumCheck(lhs, rhs)


def saalschutz_balanced(b: RationalLike, c: RationalLike, n: int) -> SumCheck:
    """Saalschutz at a = (b-c)/2, where the closed form collapses to (c)_n / (b)_n."""
    b, c = rat(b), rat(c)
    a = (b - c) / 2
    lhs = hyper_terms([Fraction(-n), a, n + b + c - 1], [b, (b + c) / 2], n)
    rhs = safe_div(pochhammer(c, n), pochhammer(b, n), f"({b})_{n} = 0")
    return SumCheck(lhs, rhs)


def wellpoised_29(b: RationalLike, c: RationalLike, n: int) -> SumCheck:
    b, c = rat(b), rat(c)
    half = Fraction(1, 2)
    lhs = hyper_terms(
        [Fraction(-n), b, c], [b + n + 1, b - c + 1], n, weight=lambda k: b + 2 * k
    )
    den = pochhammer(b - c + 1, n) * pochhammer(b / 2 + half, n)
    rhs = safe_div(pochhammer(b, n + 1) * pochhammer(b / 2 - c + half, n), den, "pole in closed form")
    return SumCheck(lhs, rhs)


def half_shift_identity(b: RationalLike, k: int) -> SumCheck:
    """(b/2)_k (b + 2k) = b (b/2 + 1)_k."""
    b = rat(b)
    return SumCheck(pochhammer(b / 2, k) * (b + 2 * k), b * pochhammer(b / 2 + 1, k))
