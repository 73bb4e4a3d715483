"""Deterministic check reports shared by the verification drivers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    lhs: str
    rhs: str
    passed: bool

    def to_json_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "pass": self.passed}


@dataclass
class Report:
    target: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, lhs: str, rhs: str, passed: bool) -> None:
        self.checks.append(CheckResult(name, lhs, rhs, passed))

    def check_equal(self, name: str, left, right) -> bool:
        """Record an exact-equality check; renders both sides."""
        ok = left == right
        self.checks.append(CheckResult(name, str(left), str(right), ok))
        return ok

    def check_true(self, name: str, condition: bool,
                   lhs: str = "", rhs: str = "") -> bool:
        self.checks.append(CheckResult(name, lhs, rhs, bool(condition)))
        return bool(condition)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(CheckResult(name, c.lhs, c.rhs, c.passed))
        self.notes.extend(other.notes)

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "checks": [c.to_json_dict() for c in self.checks],
            "pass": self.passed,
        }

    def render_text(self) -> str:
        lines = []
        for note in self.notes:
            lines.append(f"# {note}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            if c.lhs or c.rhs:
                lines.append(f"{status} {c.name}: {c.lhs} == {c.rhs}")
            else:
                lines.append(f"{status} {c.name}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} {self.target}")
        return "\n".join(lines)
