"""Small shared report type for the verification suites.

Rationals are serialized as canonical Fraction strings ("7", "-1/12") so
that report JSON never contains floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["CheckReport", "jsonable"]


def jsonable(value):
    """Recursively convert report payloads to JSON-safe values."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    return value


@dataclass
class CheckReport:
    """Outcome of one verification pass: what ran, what disagreed."""

    name: str
    checked: int
    mismatches: list[tuple] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return not self.mismatches and self.checked > 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "mismatch_count": len(self.mismatches),
            "mismatches": jsonable(self.mismatches),
            "details": jsonable(self.details),
            "verdict": self.verdict,
        }
