"""Betti numbers, Euler characteristic and Chern numbers of a terminalized fourfold."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import format_rational


@dataclass(frozen=True)
class TopologyRecord:
    b4: int
    chi: int
    c4: Fraction
    c2sq: Fraction

    def poincare_ok(self, b2: int, b3: int) -> bool:
        """chi = 2 + 2 b2 - 2 b3 + b4 for a fourfold with b1 = 0."""
        return self.chi == 2 + 2 * b2 - 2 * b3 + self.b4

    def to_dict(self) -> dict:
        return {"b4": self.b4, "chi": self.chi, "c4": format_rational(self.c4), "c2sq": format_rational(self.c2sq)}


def topology_n2(b2: int, b3: int, a2: int, a3: int, a4: int) -> TopologyRecord:
    if min(b2, b3, a2, a3, a4) < 0:
        raise ValueError("inputs must be non-negative")
    sing = a2 + 2 * a3 + 3 * a4
    b4 = 10 * b2 - b3 + 46 - sing
    chi = 12 * b2 - 3 * b3 + 48 - sing
    c4 = chi - Fraction(a2, 2) - Fraction(2 * a3, 3) - Fraction(3 * a4, 4)
    c2sq = c4 / 3 + 720 - 240 * (Fraction(a2, 32) + Fraction(2 * a3, 27) + Fraction(9 * a4, 64))
    return TopologyRecord(b4, chi, c4, c2sq)
