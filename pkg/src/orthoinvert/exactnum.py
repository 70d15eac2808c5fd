"""Exact rational scalars and the rising-factorial kernels.

Scalars are plain :class:`fractions.Fraction` values.  Every Gamma quotient
that shows up in the formulas is rewritten as a ratio of Pochhammer symbols,
so nothing here ever evaluates Gamma at a non-integer argument.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class ZeroDenominator(ZeroDivisionError):
    """A Pochhammer denominator vanished: the parameter point is a pole."""


class DomainError(ValueError):
    """A parameter lies outside the domain required by a construction."""


class ArityError(ValueError):
    """A check was called with an unsupported family kind or index range."""


def rat(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings must be ``"p/q"`` or an integer literal; floats and decimal strings
    are rejected so that nothing inexact leaks into a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        if not _is_int_literal(num) or (sep and not _is_int_literal(den, signed=False)):
            raise ValueError(f"not a rational literal: {value!r}")
        if sep and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if sep else 1)
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def _is_int_literal(text: str, signed: bool = True) -> bool:
    if signed and text[:1] in "+-":
        text = text[1:]
    return text.isdigit() and text.isascii()


def rat_str(value: Fraction) -> str:
    """Serialize as ``"p/q"`` (``"p"`` when q = 1)."""
    return str(Fraction(value))


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = rat(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
        if not out:
            return out
    return out


def binom_rat(a: RationalLike, k: int) -> Fraction:
    """Generalized binomial C(a, k) = (a-k+1)_k / k!.

    A negative lower index gives 0; this is the convention that makes
    terms like C(n + c, n - 2) vanish for n < 2.
    """
    if k < 0:
        return Fraction(0)
    a = rat(a)
    return pochhammer(a - k + 1, k) / factorial(k)


def pochhammer_ratio(a: RationalLike, num_len: int, den_len: int) -> Fraction:
    """(a)_num_len / (a)_den_len, raising ZeroDenominator at a pole."""
    den = pochhammer(a, den_len)
    if not den:
        raise ZeroDenominator(f"({rat(a)})_{den_len} = 0")
    return pochhammer(a, num_len) / den


def safe_div(num: Fraction, den: Fraction, what: str = "") -> Fraction:
    if not den:
        raise ZeroDenominator(what or "zero denominator")
    return Fraction(num) / den
