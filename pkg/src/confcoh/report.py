"""Structured pass/fail records shared by every verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    suite: str
    label: str
    expected: str
    got: str
    passed: bool
    m: int | None = None
    degree: int | None = None
    skipped: bool = False

    def line(self) -> str:
        status = "SKIPPED-OPEN" if self.skipped else ("ok" if self.passed else "FAIL")
        where = []
        if self.m is not None:
            where.append(f"m={self.m}")
        if self.degree is not None:
            where.append(f"degree={self.degree}")
        loc = " ".join(where)
        return (
            f"[{self.suite}] {loc} {self.label}: "
            f"expected={self.expected} got={self.got} {status}"
        ).replace("  ", " ")


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(
        self,
        suite: str,
        label: str,
        expected: object,
        got: object,
        *,
        m: int | None = None,
        degree: int | None = None,
    ) -> bool:
        ok = str(expected) == str(got)
        self.checks.append(
            CheckResult(suite, label, str(expected), str(got), ok, m, degree)
        )
        return ok

    def add_bool(
        self,
        suite: str,
        label: str,
        passed: bool,
        *,
        m: int | None = None,
        degree: int | None = None,
        expected: object = "true",
        got: object | None = None,
    ) -> bool:
        shown = str(got) if got is not None else ("true" if passed else "false")
        self.checks.append(
            CheckResult(suite, label, str(expected), shown, passed, m, degree)
        )
        return passed

    def add_skip(self, suite: str, label: str, *, m: int | None = None) -> None:
        self.checks.append(
            CheckResult(suite, label, "open", "open", True, m, None, skipped=True)
        )

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        n_skip = sum(1 for c in self.checks if c.skipped)
        return (
            f"{len(self.checks)} checks, {len(self.failures())} failures"
            + (f", {n_skip} skipped-open" if n_skip else "")
        )

    def to_json_obj(self) -> dict:
        return {
            "passed": self.passed,
            "summary": self.summary(),
            "checks": [
                {
                    "suite": c.suite,
                    "m": c.m,
                    "degree": c.degree,
                    "label": c.label,
                    "expected": c.expected,
                    "got": c.got,
                    "passed": c.passed,
                    "skipped": c.skipped,
                }
                for c in self.checks
            ],
        }
