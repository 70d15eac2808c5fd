"""Triangular operator systems sum_i A_i(x) D^i P_n^(alpha,beta)(x) = F_n(x).

:func:`solve_triangular` applies the closed-form inverse built on the Jacobi
inversion formula.  :func:`solve_forward` is an independent oracle that
eliminates row by row on the triangular matrix of D^i P_n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .exactnum import RationalLike, ZeroDenominator, pochhammer, rat, rat_str
from .families import jacobi
from .inversion import jacobi_inversion_weight
from .poly import Poly, differentiate
from .report import CheckReport


@dataclass(frozen=True)
class TriangularSystem:
    """Right-hand sides ``F[0] = F_1, ..., F[N-1] = F_N``."""

    alpha: Fraction
    beta: Fraction
    F: tuple[Poly, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "alpha", rat(self.alpha))
        object.__setattr__(self, "beta", rat(self.beta))
        object.__setattr__(self, "F", tuple(self.F))

    @property
    def N(self) -> int:
        return len(self.F)

    def rhs(self, n: int) -> Poly:
        return self.F[n - 1]

    def to_json(self) -> dict:
        return {
            "alpha": rat_str(self.alpha),
            "beta": rat_str(self.beta),
            "F": [f.to_json() for f in self.F],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TriangularSystem":
        return cls(rat(data["alpha"]), rat(data["beta"]), tuple(Poly.from_json(f) for f in data["F"]))

    @classmethod
    def load(cls, path: str | Path) -> "TriangularSystem":
        return cls.from_json(json.loads(Path(path).read_text()))


def operator_entry(n: int, i: int, alpha: Fraction, beta: Fraction) -> Poly:
    """D^i P_n^(alpha,beta) = (n+alpha+beta+1)_i / 2^i P_{n-i}^(alpha+i, beta+i)."""
    return jacobi(n - i, alpha + i, beta + i).scale(pochhammer(n + alpha + beta + 1, i) / 2**i)


def solve_triangular(sys: TriangularSystem) -> list[Poly]:
    """Closed-form A_1..A_N.

    A_i = 2^i sum_{j=1}^i (a+b+2j+1)/(a+b+j+1)_{i+1} P_{i-j}^(-a-i-1,-b-i-1) F_j.
    """
    a, b = sys.alpha, sys.beta
    s = a + b + 1
    out = []
    for i in range(1, sys.N + 1):
        acc = Poly()
        for j in range(1, i + 1):
            # (s+2j)/(s+j)_{i+1} is the inversion weight at row i, column 0, index j
            w = jacobi_inversion_weight(i, 0, j, s)
            acc = acc + (jacobi(i - j, -a - i - 1, -b - i - 1) * sys.rhs(j)).scale(w)
        out.append(acc.scale(2**i))
    return out


def solve_forward(sys: TriangularSystem) -> list[Poly]:
    """Row-by-row elimination; requires each diagonal (n+a+b+1)_n / 2^n nonzero."""
    a, b = sys.alpha, sys.beta
    A: list[Poly] = []
    for n in range(1, sys.N + 1):
        acc = sys.rhs(n)
        for i in range(1, n):
            acc = acc - A[i - 1] * operator_entry(n, i, a, b)
        diag = pochhammer(n + a + b + 1, n) / 2**n
        if not diag:
            raise ZeroDenominator(f"singular diagonal at n={n}")
        A.append(acc.scale(1 / diag))
    return A


def apply_operator(A: Sequence[Poly], alpha: RationalLike, beta: RationalLike, n: int) -> Poly:
    """sum_{i=1}^{n} A_i D^i P_n, differentiating the constructed polynomial directly."""
    p = jacobi(n, alpha, beta)
    out = Poly()
    for i in range(1, min(n, len(A)) + 1):
        out = out + A[i - 1] * differentiate(p, i)
    return out


def forward_system(A: Sequence[Poly], alpha: RationalLike, beta: RationalLike, N: int | None = None) -> TriangularSystem:
    N = len(A) if N is None else N
    return TriangularSystem(rat(alpha), rat(beta), tuple(apply_operator(A, alpha, beta, n) for n in range(1, N + 1)))


def residual_check(sys: TriangularSystem, A: Sequence[Poly]) -> list[CheckReport]:
    """Back-substitute A using the derivative rule, one report per row."""
    if len(A) < sys.N:
        raise ValueError(f"need at least {sys.N} coefficients, got {len(A)}")
    a, b = sys.alpha, sys.beta
    reports = []
    for n in range(1, sys.N + 1):
        lhs = Poly()
        for i in range(1, n + 1):
            lhs = lhs + A[i - 1] * operator_entry(n, i, a, b)
        reports.append(CheckReport("System", {"n": n, "alpha": a, "beta": b}, lhs - sys.rhs(n)))
    return reports
