"""Verification reports and the comparison helper shared by all checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exactalg import Poly, RatFunc, format_poly, ratfunc_to_json, rf_equal

__all__ = ["VerificationReport", "Checker", "truncate_poly"]

MAX_DIFF_TERMS = 20


def truncate_poly(p: Poly, limit: int = MAX_DIFF_TERMS) -> dict:
    items = list(p.items())
    head = Poly(dict(items[:limit]))
    return {"text": format_poly(head) + (" + ..." if len(items) > limit else ""),
            "terms": len(items)}


@dataclass
class VerificationReport:
    """Outcome of checking one identity over a finite index range."""

    identity: str
    tested_range: str
    passed: bool = True
    cases: int = 0
    counterexample: dict | None = None
    note: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict[str, Any]:
        out = {
            "identity": self.identity,
            "range": self.tested_range,
            "status": "pass" if self.passed else "fail",
            "cases": self.cases,
        }
        if self.note:
            out["note"] = self.note
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity} [{self.tested_range}] cases={self.cases}"
        if self.counterexample:
            line += f" first counterexample at {self.counterexample['indices']}"
        return line


@dataclass
class Checker:
    """Accumulates lhs == rhs comparisons and keeps the first counterexample."""

    identity: str
    tested_range: str
    note: str = ""
    report: VerificationReport = field(init=False)

    def __post_init__(self):
        self.report = VerificationReport(self.identity, self.tested_range, note=self.note)

    def check(self, indices: dict, lhs, rhs) -> bool:
        self.report.cases += 1
        if rf_equal(lhs, rhs):
            return True
        if self.report.passed:
            self.report.passed = False
            lhs_r, rhs_r = RatFunc.coerce(lhs), RatFunc.coerce(rhs)
            diff = lhs_r - rhs_r
            self.report.counterexample = {
                "indices": dict(indices),
                "lhs": ratfunc_to_json(lhs_r),
                "rhs": ratfunc_to_json(rhs_r),
                "difference": {
                    "num": truncate_poly(diff.num),
                    "den": truncate_poly(diff.den),
                },
            }
        return False

    def require(self, indices: dict, condition: bool, detail: str = "") -> bool:
        self.report.cases += 1
        if condition:
            return True
        if self.report.passed:
            self.report.passed = False
            self.report.counterexample = {"indices": dict(indices), "detail": detail}
        return False

    def done(self) -> VerificationReport:
        return self.report
