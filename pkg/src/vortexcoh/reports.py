"""Structured outcomes of identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from vortexcoh.exactnum import PiRadical, rat_str

Exact = Union[int, Fraction, PiRadical]
PASS, FAIL = "pass", "fail"


def _exact_str(value) -> str:
    if isinstance(value, PiRadical):
        return str(value) if not value.is_rational() else rat_str(value.coeff)
    if isinstance(value, float):
        return repr(value)
    return rat_str(value)


def _param_json(value):
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rat_str(value)
    return value


def _param_sort_key(value):
    if isinstance(value, str):
        return (1, value)
    return (0, value)


@dataclass(frozen=True)
class VerifyReport:
    identity_id: str
    params: dict[str, Any]
    status: str
    lhs: str
    rhs: str
    residual: Fraction | float | PiRadical
    tolerance: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self):
        return (self.identity_id, tuple((k, _param_sort_key(v)) for k, v in self.params.items()))

    def to_dict(self) -> dict[str, Any]:
        out = {
            "id": self.identity_id,
            "params": {k: _param_json(v) for k, v in self.params.items()},
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": _exact_str(self.residual),
        }
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
        return out


def exact_report(identity_id: str, params: dict[str, Any], lhs: Exact, rhs: Exact) -> VerifyReport:
    """Zero-tolerance comparison; pi content must cancel in the residual."""
    if isinstance(lhs, PiRadical) or isinstance(rhs, PiRadical):
        lhs_p = lhs if isinstance(lhs, PiRadical) else PiRadical(lhs)
        rhs_p = rhs if isinstance(rhs, PiRadical) else PiRadical(rhs)
        if lhs_p.half_exponent == rhs_p.half_exponent or lhs_p.coeff == 0 or rhs_p.coeff == 0:
            residual = lhs_p - rhs_p
            residual = residual.coeff if residual.is_rational() else residual
        else:
            residual = lhs_p  # incommensurable: cannot be equal unless both vanish
        ok = isinstance(residual, Fraction) and residual == 0
    else:
        residual = Fraction(lhs) - Fraction(rhs)
        ok = residual == 0
    return VerifyReport(identity_id, dict(params), PASS if ok else FAIL, _exact_str(lhs), _exact_str(rhs), residual)


def float_report(identity_id: str, params: dict[str, Any], lhs: float, rhs: float, tolerance: float) -> VerifyReport:
    residual = float(lhs) - float(rhs)
    status = PASS if abs(residual) <= tolerance else FAIL
    return VerifyReport(identity_id, dict(params), status, repr(float(lhs)), repr(float(rhs)), residual, tolerance)


@dataclass
class SuiteResult:
    reports: list[VerifyReport] = field(default_factory=list)
    errata: list[str] = field(default_factory=list)
    errata_fits: dict[str, str] = field(default_factory=dict)

    @property
    def summary(self) -> dict[str, int]:
        n_pass = sum(r.passed for r in self.reports)
        return {"pass": n_pass, "fail": len(self.reports) - n_pass}

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def by_id(self, identity_id: str) -> list[VerifyReport]:
        return [r for r in self.reports if r.identity_id == identity_id]

    def to_dict(self) -> dict[str, Any]:
        return {
            "summary": self.summary,
            "errata": list(self.errata),
            "errata_fits": dict(self.errata_fits),
            "reports": [r.to_dict() for r in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
