from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class LawResult:
    """Outcome of evaluating a single identity or inequality."""

    name: str
    passed: bool
    residual: float = 0.0


@dataclass(frozen=True)
class Verdict:
    """Named collection of boolean checks produced by a ``check_*`` routine.

    ``values`` carries auxiliary booleans (for instance the raw truth values
    of each equivalent condition) that are reported but not themselves
    pass/fail criteria.
    """

    name: str
    checks: dict = field(default_factory=dict)
    residual: float = 0.0
    values: tuple = ()
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed_checks(self) -> list:
        return [k for k, ok in self.checks.items() if not ok]

    def __bool__(self) -> bool:
        return self.passed
