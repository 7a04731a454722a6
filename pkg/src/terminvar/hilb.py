"""Invariants of terminalized quotients of Hilbert squares of K3 surfaces."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .catalogue import name_group
from .groups import GroupFingerprint, SizeCapExceeded, TableGroup, parse_cycles, table_from_permutations

DEFAULT_PERM_CAP = 10_000


def perm_cap() -> int:
    return int(os.environ.get("TERMINVAR_PERM_CAP", DEFAULT_PERM_CAP))


@dataclass
class PermGroup:
    degree: int
    generators: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cycles(cls, gens: list[str] | tuple[str, ...], degree: int) -> PermGroup:
        return cls(degree, tuple(tuple(parse_cycles(g, degree)) for g in gens))

    @cached_property
    def table(self) -> TableGroup:
        tg = table_from_permutations([list(g) for g in self.generators], self.degree)
        if tg.n > perm_cap():
            raise SizeCapExceeded(f"permutation group of order {tg.n} exceeds cap {perm_cap()}")
        return tg

    @property
    def order(self) -> int:
        return self.table.n

    @property
    def classes(self) -> list[np.ndarray]:
        return self.table.classes


@dataclass(frozen=True)
class HilbRecord:
    group_id: str
    rank: int
    N2: int
    b2: int
    pi1: GroupFingerprint

    def to_dict(self) -> dict:
        return {"group_id": self.group_id, "rank": self.rank, "N2": self.N2, "b2": self.b2, "pi1": self.pi1.name}


def hilb_invariants(g: PermGroup, rank: int, group_id: str = "") -> HilbRecord:
    """N2 = classes of involutions, b2 = rank + N2, pi1 = G / <<involutions>>."""
    tg = g.table
    if tg.n % 2:
        raise ValueError("odd order: the quotient is terminal and not in the table")
    inv = np.nonzero(tg.orders == 2)[0]
    n2 = len({int(tg.class_labels[x]) for x in inv})
    pi1 = name_group(tg.quotient(tg.normal_closure(inv)))
    return HilbRecord(group_id, rank, n2, rank + n2, pi1)
