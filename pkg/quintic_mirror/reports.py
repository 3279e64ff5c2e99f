from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from quintic_mirror.algebra.rational import QQ, Rational, format_rational


def exact(value: Any) -> Any:
    """JSON form of an exact value: rationals as "num/den", integers as decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Rational):
        return format_rational(value)
    if isinstance(value, (FracElement, PolyElement)):
        return str(value.as_expr())
    if isinstance(value, (list, tuple)):
        return [exact(item) for item in value]
    if isinstance(value, dict):
        return {str(key): exact(item) for key, item in value.items()}
    try:
        return format_rational(QQ.convert(value))
    except Exception:  # anything non-numeric is reported by its text
        return str(value)


@dataclass
class CheckEntry:
    label: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"check": self.label, "pass": self.passed, **exact(self.detail)}


@dataclass
class VerificationReport:
    name: str
    params: dict[str, Any] = field(default_factory=dict)
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def add(self, label: str, passed: bool, **detail: Any) -> CheckEntry:
        entry = CheckEntry(label, bool(passed), detail)
        self.entries.append(entry)
        return entry

    def failures(self) -> list[CheckEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def extend(self, other: VerificationReport, prefix: str = "") -> None:
        for entry in other.entries:
            self.entries.append(CheckEntry(f"{prefix}{entry.label}", entry.passed, entry.detail))

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": exact(self.params),
            "pass": self.passed,
            "checks": [entry.to_dict() for entry in self.entries],
        }
