"""Validation reports shared by every checker in the package.

A report is an ordered list of violations.  Checkers are exhaustive: they
collect every violation they can find rather than stopping at the first,
so tests can assert exact witness sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple
    message: str = ""

    def __str__(self) -> str:
        ids = " ".join(str(w) for w in self.witness)
        text = f"FAIL {self.clause} {ids}".rstrip()
        if self.message:
            text += f"  # {self.message}"
        return text


@dataclass
class ValidationReport:
    checker: str = ""
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause: str, witness: tuple, message: str = "") -> None:
        self.violations.append(Violation(clause, tuple(witness), message))

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def clauses(self) -> set[str]:
        return {v.clause for v in self.violations}

    def __str__(self) -> str:
        if self.ok:
            return f"PASS {self.checker}".strip()
        head = f"FAIL {self.checker}".strip()
        return "\n".join([head] + [str(v) for v in self.violations])


class StructuralError(ValueError):
    """Malformed input: dangling reference, missing table entry, bad schema.

    Distinct from an axiom violation, which is reported in a
    ValidationReport instead of raised.
    """
