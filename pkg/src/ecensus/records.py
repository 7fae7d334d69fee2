from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cm import LatticeVector


class Kind(str, Enum):
    ORDINARY = "ordinary"
    EXTRA_ORDINARY = "extra-ordinary"


@dataclass(frozen=True)
class CurveRecord:
    """One elliptic curve: its class tuple, degree, kind and optionally a lattice basis."""

    coords: tuple[int, ...]
    degree: int
    kind: Kind
    basis: tuple[LatticeVector, LatticeVector] | None = None

    def sort_key(self):
        return (self.degree, tuple(self.coords))


def sorted_records(records) -> list[CurveRecord]:
    return sorted(records, key=CurveRecord.sort_key)
