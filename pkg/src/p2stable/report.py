"""Machine-readable check reports shared by the catalog verifier and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Check:
    name: str
    passed: bool
    details: str = ""
    witness: Optional[object] = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail", "details": self.details}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Check":
        status = data["status"]
        if status not in ("pass", "fail"):
            raise ValueError(f"bad status {status!r}")
        return cls(data["name"], status == "pass", data.get("details", ""), data.get("witness"))


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, details: str = "", witness=None) -> bool:
        self.checks.append(Check(name, bool(passed), details, witness))
        return bool(passed)

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.details, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        n_pass = sum(c.passed for c in self.checks)
        return {"total": len(self.checks), "passed": n_pass, "failed": len(self.checks) - n_pass}

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary(),
            "status": "pass" if self.passed else "fail",
        }

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        return cls(data["title"], [Check.from_json(c) for c in data["checks"]])

    def render(self) -> str:
        lines = [self.title]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.details:
                line += f": {c.details}"
            lines.append(line)
        s = self.summary()
        lines.append(f"{s['passed']}/{s['total']} checks passed")
        return "\n".join(lines)
