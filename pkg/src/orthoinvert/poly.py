"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first, trailing zeros stripped, so the
zero polynomial is the empty tuple and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import RationalLike, rat, rat_str


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _strip(rat(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: Iterable[Fraction]) -> "Poly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _strip(coeffs))
        return p

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls._raw((rat(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "Poly":
        return cls._raw([Fraction(0)] * k + [rat(c)])

    @classmethod
    def linear(cls, slope: RationalLike, intercept: RationalLike) -> "Poly":
        """slope * x + intercept"""
        return cls._raw((rat(intercept), rat(slope)))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((Fraction(other),))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(rat_str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{rat_str(c)}{'*' + mono if mono else ''}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    # ring operations

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly._raw((Fraction(other),))
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly._raw([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(out)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "Poly":
        c = rat(c)
        if not c:
            return Poly._raw(())
        return Poly._raw(c * a for a in self.coeffs)

    def __truediv__(self, c) -> "Poly":
        # only division by a scalar
        if isinstance(c, Poly):
            if c.degree != 0:
                return NotImplemented
            c = c.coeffs[0]
        return self.scale(1 / rat(c))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # calculus and substitution

    def differentiate(self, order: int = 1) -> "Poly":
        return differentiate(self, order)

    def reflect(self) -> "Poly":
        return reflect(self)

    def __call__(self, x0):
        if isinstance(x0, Poly):
            return compose(self, x0)
        return evaluate(self, x0)

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "Poly":
        return cls(rat(c) for c in data)


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


def differentiate(p: Poly, order: int = 1) -> Poly:
    """D^order p."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    cs = p.coeffs
    if order == 0:
        return p
    if order >= len(cs):
        return ZERO
    out = []
    for i in range(order, len(cs)):
        f = 1
        for j in range(i - order + 1, i + 1):
            f *= j
        out.append(cs[i] * f)
    return Poly._raw(out)


def reflect(p: Poly) -> Poly:
    """p(-x)."""
    return Poly._raw(-c if i & 1 else c for i, c in enumerate(p.coeffs))


def evaluate(p: Poly, x0: RationalLike) -> Fraction:
    x0 = rat(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(x)) by Horner's scheme."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * q + Poly._raw((c,))
    return acc


def shift(p: Poly, h: RationalLike) -> Poly:
    """p(x + h)."""
    return compose(p, Poly.linear(1, h))


def latex(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{{{i}}}")
        if c == 1 and mono:
            body = mono
        elif c.denominator == 1:
            body = f"{c.numerator}{mono}"
        else:
            body = f"\\frac{{{c.numerator}}}{{{c.denominator}}}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
