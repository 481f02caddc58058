"""Shared result types for verifiers and reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

MAX_RECORDED_FAILURES = 25


@dataclass(frozen=True)
class CheckFailure:
    """One violated identity, located by basis indices."""

    check: str
    indices: Tuple[int, ...] = ()
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "indices": list(self.indices),
            "message": self.message,
        }


@dataclass
class VerifyResult:
    """Outcome of a verifier: a verdict plus the failures behind it."""

    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    failures: List[CheckFailure] = field(default_factory=list)

    @classmethod
    def from_failures(
        cls,
        name: str,
        failures: Iterable[CheckFailure],
        *,
        checked: int = 0,
        **details: Any,
    ) -> "VerifyResult":
        collected = list(failures)
        payload: Dict[str, Any] = {
            "check": name,
            "checked": checked,
            "failure_count": len(collected),
        }
        payload.update(details)
        return cls(
            passed=not collected,
            details=payload,
            failures=collected[:MAX_RECORDED_FAILURES],
        )

    @classmethod
    def combine(
        cls, name: str, results: Dict[str, "VerifyResult"]
    ) -> "VerifyResult":
        failures: List[CheckFailure] = []
        for result in results.values():
            failures.extend(result.failures)
        return cls(
            passed=all(result.passed for result in results.values()),
            details={
                "check": name,
                "parts": {
                    key: result.passed for key, result in results.items()
                },
            },
            failures=failures[:MAX_RECORDED_FAILURES],
        )

    @property
    def first_failure(self) -> CheckFailure | None:
        return self.failures[0] if self.failures else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "details": self.details,
            "failures": [failure.to_dict() for failure in self.failures],
        }


__all__ = ["CheckFailure", "VerifyResult", "MAX_RECORDED_FAILURES"]
