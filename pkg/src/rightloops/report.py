"""Result objects for exhaustive identity checks and predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Violation:
    identity: str
    witness: tuple
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"identity": self.identity, "witness": list(self.witness), "detail": self.detail}


@dataclass
class CheckReport:
    """Outcome of an exhaustive sweep; ``checked`` counts instances per identity."""

    name: str
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    applicable: bool = True
    note: str = ""
    facts: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.applicable and not self.violations

    def __bool__(self):
        return self.holds

    def fail(self, identity: str, witness: tuple, detail: str = "") -> None:
        # keep only the first (lexicographically least) witness per identity
        if not any(v.identity == identity for v in self.violations):
            self.violations.append(Violation(identity, tuple(witness), detail))

    def count(self, identity: str, k: int = 1) -> None:
        self.checked[identity] = self.checked.get(identity, 0) + k

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "holds": self.holds,
            "note": self.note,
            "checked": dict(self.checked),
            "violations": [v.to_dict() for v in self.violations],
            "facts": self.facts,
        }


@dataclass
class Verdict:
    """A boolean with an optional witness explaining a negative answer."""

    holds: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict[str, Any]:
        return {"holds": self.holds, "witness": list(self.witness) if self.witness else None,
                "reason": self.reason}
