"""Structured pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckEntry:
    """One compared pair of values; `note` records an error if a side failed."""

    n: int
    label: str
    left: object = None
    right: object = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.left is not None and self.right is not None and self.left == self.right


@dataclass
class VerifyReport:
    """Per-identity comparison record with one entry per checked index."""

    identity: str
    left_method: str
    right_method: str
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "methods": [self.left_method, self.right_method],
            "pass": self.passed,
            "entries": [
                {
                    "n": e.n,
                    "label": e.label,
                    "left": None if e.left is None else str(e.left),
                    "right": None if e.right is None else str(e.right),
                    "pass": e.passed,
                    **({"note": e.note} if e.note else {}),
                }
                for e in self.entries
            ],
        }
