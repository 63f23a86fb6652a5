"""Named pass/fail records shared by verification routines and the CLI suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def all_passed(checks):
    return all(c.passed for c in checks)
