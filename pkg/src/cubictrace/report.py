"""Structured pass/fail reports for the verification suites and tables."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check_id: str
    ok: bool
    detail: str = ""
    elapsed: float = 0.0


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check_id: str, ok: bool, detail: str = "", elapsed: float = 0.0) -> None:
        self.checks.append(CheckResult(check_id, bool(ok), detail, elapsed))

    def run(self, check_id: str, thunk, detail: str = "") -> None:
        start = time.perf_counter()
        try:
            ok = thunk()
            note = detail
        except Exception as exc:  # surfaces as a failure with the message
            ok = False
            note = f"{detail + '; ' if detail else ''}error: {exc}"
        self.add(check_id, bool(ok), note, time.perf_counter() - start)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def merged(self, other: "SuiteReport") -> "SuiteReport":
        out = SuiteReport(self.suite)
        out.checks = list(self.checks) + list(other.checks)
        return out

    def render(self, timings: bool = False) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            line = f"  [{status}] {c.check_id}"
            if c.detail:
                line += f" ({c.detail})"
            if timings:
                line += f" [{c.elapsed:.2f}s]"
            lines.append(line)
        passed = sum(1 for c in self.checks if c.ok)
        lines.append(f"  {passed}/{len(self.checks)} checks passed")
        return "\n".join(lines)
