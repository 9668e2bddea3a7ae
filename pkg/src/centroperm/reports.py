"""
Structured, serializable reports for verification commands.

A report is a command name, its inputs, and a flat list of checks; each
check is pass/fail/info with expected and actual rendered as text, so a
report round-trips exactly through JSON. Exit-code convention: a report
with any failing check maps to exit code 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
INFO = "info"


def _text(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, (list, tuple)):
        return ",".join(_text(v) for v in value)
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    expected: str = ""
    actual: str = ""
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL, INFO):
            raise ValueError(f"unknown check status {self.status!r}")


def check(name: str, ok: bool, expected="", actual="", detail="") -> Check:
    return Check(
        name=name,
        status=PASS if ok else FAIL,
        expected=_text(expected),
        actual=_text(actual),
        detail=_text(detail),
    )


def info(name: str, value, detail="") -> Check:
    return Check(name=name, status=INFO, actual=_text(value), detail=_text(detail))


@dataclass(frozen=True)
class Report:
    command: str
    inputs: tuple[tuple[str, str], ...]
    checks: tuple[Check, ...]

    @staticmethod
    def build(command: str, inputs: dict, checks) -> "Report":
        return Report(
            command=command,
            inputs=tuple(sorted((str(k), _text(v)) for k, v in inputs.items())),
            checks=tuple(checks),
        )

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": {k: v for k, v in self.inputs},
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "expected": c.expected,
                    "actual": c.actual,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
            "passed": self.passed,
        }

    @staticmethod
    def from_dict(data: dict) -> "Report":
        return Report(
            command=data["command"],
            inputs=tuple(sorted((k, v) for k, v in data["inputs"].items())),
            checks=tuple(
                Check(
                    name=c["name"],
                    status=c["status"],
                    expected=c.get("expected", ""),
                    actual=c.get("actual", ""),
                    detail=c.get("detail", ""),
                )
                for c in data["checks"]
            ),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_json(text: str) -> "Report":
        return Report.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for k, v in self.inputs:
            lines.append(f"#   {k} = {v}")
        for c in self.checks:
            if c.status == INFO:
                line = f"[info] {c.name}: {c.actual}"
            else:
                line = f"[{c.status.upper()}] {c.name}"
                if c.expected or c.actual:
                    line += f": expected {c.expected} | actual {c.actual}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        failed = sum(1 for c in self.checks if c.status == FAIL)
        judged = sum(1 for c in self.checks if c.status != INFO)
        lines.append(f"# {judged - failed}/{judged} checks passed")
        return "\n".join(lines)

    def to_csv(self) -> str:
        def esc(s: str) -> str:
            if any(ch in s for ch in ',"\n'):
                return '"' + s.replace('"', '""') + '"'
            return s

        rows = ["command,check,status,expected,actual,detail"]
        for c in self.checks:
            rows.append(
                ",".join(
                    esc(x)
                    for x in (self.command, c.name, c.status, c.expected, c.actual, c.detail)
                )
            )
        return "\n".join(rows)


def merge_reports(command: str, inputs: dict, reports) -> Report:
    """Concatenate the checks of several sub-reports, prefixing their names."""
    checks: list[Check] = []
    for prefix, report in reports:
        for c in report.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            checks.append(
                Check(
                    name=name,
                    status=c.status,
                    expected=c.expected,
                    actual=c.actual,
                    detail=c.detail,
                )
            )
    return Report.build(command, inputs, checks)
