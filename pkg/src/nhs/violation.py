"""Machine-readable reports of failed conditions."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Condition(str, enum.Enum):
    C2 = "C2"
    C3 = "C3"
    C3ZERO = "C3zero"
    C4 = "C4"
    C5 = "C5"
    TRANSVERSALITY = "Transversality"
    STRUCTURE = "Structure"


@dataclass(frozen=True)
class Violation:
    """A single failed check.

    Attributes:
        condition: Which condition failed.
        location: Ids (vertices, edges, regions, circles) where it failed;
            the first id is the primary offender.
        message: Human-readable explanation.
    """

    condition: Condition
    location: tuple[str, ...]
    message: str

    def sort_key(self):
        return (self.condition.value, self.location[0] if self.location else "", self.location, self.message)

    def format(self) -> str:
        return f"VIOLATION cond={self.condition.value} at={','.join(self.location)} msg={self.message}"


def sorted_violations(violations):
    return sorted(violations, key=Violation.sort_key)
