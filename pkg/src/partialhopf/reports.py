"""Verification reports.

Verifiers never fail fast: each named check collects the full list of
failing instances (index tuple plus both sides), so a broken input shows
every violated equation at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    at: tuple
    lhs: object = None
    rhs: object = None


@dataclass
class Check:
    name: str
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def add(self, at, lhs=None, rhs=None):
        self.failures.append(Failure(tuple(at), lhs, rhs))

    def require(self, condition, at, lhs=None, rhs=None):
        if not condition:
            self.add(at, lhs, rhs)


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)

    def new_check(self, name) -> Check:
        c = Check(name)
        self.checks.append(c)
        return c

    def absorb(self, other: "Report", prefix: str = ""):
        """Merge another report's checks, optionally prefixing their names."""
        for c in other.checks:
            merged = Check(prefix + c.name, list(c.failures))
            self.checks.append(merged)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failed_checks(self):
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        lines = [f"{self.subject}: {'pass' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  [{mark}] {c.name} ({len(c.failures)} failing)")
        return "\n".join(lines)
