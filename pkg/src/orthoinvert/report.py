from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .exactnum import rat_str
from .poly import Poly


def _jsonable(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return rat_str(v)
    if isinstance(v, Poly):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    ``residual`` is the exact difference LHS - RHS; the check passes iff it is
    the zero polynomial.
    """

    identity: str
    params: Mapping[str, Any]
    residual: Poly = field(default_factory=Poly)

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    @property
    def status(self) -> str:
        return "ok" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "status": self.status,
        }
        if not self.passed:
            out["residual"] = self.residual.to_json()
        return out


def skipped_pole(identity: str, params: Mapping[str, Any], reason: str) -> dict:
    return {
        "identity": identity,
        "params": {k: _jsonable(v) for k, v in params.items()},
        "status": "skipped-pole",
        "reason": reason,
    }
