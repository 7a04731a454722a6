"""Qualifying elements, N2/N3, the BD12 correction, b2, pi1 and the canonicity gate."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import IntMatrix
from .groups import (
    ActionGroup,
    AffineContext,
    AffineSymplectomorphism,
    GroupFingerprint,
    quotient_fingerprint,
)


class Tag(str, Enum):
    NONE = "none"
    INVOLUTION = "involution-surface"
    ORDER3 = "order3-surface"


@dataclass(frozen=True)
class QualificationTag:
    element: AffineSymplectomorphism
    tag: Tag


def qualify(g: AffineSymplectomorphism, n: int) -> QualificationTag:
    """Tag ``g`` by the codimension-2 component of its fixed locus on K_n(A)."""
    m = g.linear.int_matrix
    ident = IntMatrix.identity(4)
    alpha = g.translation
    tag = Tag.NONE
    if n == 2:
        if m == -ident:
            tag = Tag.INVOLUTION
        elif m != ident and m.power(3) == ident and alpha.transform(m) == alpha:
            tag = Tag.ORDER3
    elif n == 3:
        if m == -ident and (alpha * 2).is_zero():
            tag = Tag.INVOLUTION
    return QualificationTag(g, tag)


def _context_tags(ctx: AffineContext, n: int) -> np.ndarray:
    """Tag codes (0 none, 1 involution, 2 order 3) for every code of a context."""
    cached = getattr(ctx, "_tags", {})
    if n in cached:
        return cached[n]
    ident = np.eye(4, dtype=np.int64)
    minus = np.array([(mat == -ident).all() for mat in ctx.mats])
    is3 = np.array(
        [not (mat == ident).all() and (np.linalg.matrix_power(mat, 3) == ident).all() for mat in ctx.mats]
    )
    t = np.arange(ctx.nT)
    fixed = ctx.tact[:, t] == t[None, :]
    out = np.zeros((ctx.nT, ctx.nL), dtype=np.int8)
    if n == 2:
        out[:, minus] = 1
        out[(fixed & is3[:, None]).T] = 2
    elif n == 3:
        two_torsion = ((ctx.tcoords * 2) % ctx.modulus == 0).all(axis=1)
        out[np.ix_(two_torsion, minus)] = 1
    tags = out.reshape(-1)
    cached[n] = tags
    ctx._tags = cached  # type: ignore[attr-defined]
    return tags


def element_tags(g: ActionGroup) -> np.ndarray:
    """Tag code per element index of ``g``."""
    return _context_tags(g.context, g.n)[g.codes]


def qualifying_indices(g: ActionGroup) -> np.ndarray:
    return np.nonzero(element_tags(g) > 0)[0]


def count_N2_N3(g: ActionGroup, n: int | None = None) -> tuple[int, int]:
    """Classes of qualifying involutions, and classes of qualifying order-3 subgroups."""
    n = g.n if n is None else n
    if n not in (2, 3):
        return 0, 0
    tags = element_tags(g)
    tg = g.table
    labels = tg.class_labels
    reps = np.unique(labels)
    n2 = int(np.count_nonzero(tags[reps] == 1))
    three = reps[tags[reps] == 2]
    subgroup_classes = {tuple(sorted((int(labels[x]), int(labels[tg.inv[x]])))) for x in three}
    return n2, len(subgroup_classes)


def bd12_epsilon(g: ActionGroup, n: int | None = None) -> int:
    """1 iff some qualifying order-3 element lies in a BD12 mapping isomorphically onto G0."""
    n = g.n if n is None else n
    if n != 2 or g.g0_name != "BD12":
        return 0
    tags = element_tags(g)
    tg = g.table
    tr = g.translation_subgroup
    reps = np.unique(tg.class_labels)
    iotas = np.nonzero(tg.orders == 4)[0]
    for x in reps[tags[reps] == 2]:
        x2 = tg.T[x, x]
        for i in iotas:
            if tg.T[tg.T[i, x], tg.inv[i]] != x2:
                continue
            h = tg.closure([int(x), int(i)])
            if int(h.sum()) == 12 and not (h & tr).sum() > 1:
                return 1
    return 0


@dataclass(frozen=True)
class BettiData:
    rank_H2A: int
    rank_LG: int
    N2: int
    N3: int
    epsilon: int
    b2: int
    b3: int | str


def ih3_rank(g: ActionGroup, n: int | None = None) -> int | str:
    """0 when G0 is nontrivial; "n/a" otherwise."""
    return 0 if g.g0_name != "1" else "n/a"


def betti_data(g: ActionGroup, n: int | None = None) -> BettiData:
    n = g.n if n is None else n
    rank_a = g.rank_h2
    rank_lg = rank_a + 1
    n2, n3 = count_N2_N3(g, n)
    eps = bd12_epsilon(g, n)
    return BettiData(rank_a, rank_lg, n2, n3, eps, rank_lg + n2 + 2 * n3 - eps, ih3_rank(g, n))


def pi1_regular_locus(g: ActionGroup, n: int | None = None) -> GroupFingerprint:
    """G modulo the normal subgroup generated by qualifying elements."""
    n = g.n if n is None else n
    idx = qualifying_indices(g) if n in (2, 3) else np.array([], dtype=np.int64)
    mask = g.table.normal_closure(idx)
    return quotient_fingerprint(g, g.subgroup(mask))


class Gate(str, Enum):
    TERMINAL = "terminal-quotient"
    STRICTLY_CANONICAL = "strictly-canonical"


def canonicity_gate(g: ActionGroup, n: int | None = None) -> Gate:
    n2, n3 = count_N2_N3(g, n)
    return Gate.STRICTLY_CANONICAL if n2 + n3 > 0 else Gate.TERMINAL


@dataclass
class InvariantRecord:
    fingerprint: GroupFingerprint
    g0: str
    model: str | None
    n: int
    betti: BettiData
    pi1: GroupFingerprint
    gate: Gate
    extra: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.betti.rank_LG

    @property
    def b2(self) -> int:
        return self.betti.b2

    def key(self) -> tuple:
        """The invariant string used to merge enumerated subgroups."""
        return (
            self.fingerprint.key(),
            self.g0,
            self.rank,
            self.betti.N2,
            self.betti.N3,
            self.b2,
            self.pi1.key(),
        )

    def to_json(self) -> dict:
        out = {
            "fingerprint": self.fingerprint.to_dict(),
            "g0": self.g0,
            "model": self.model,
            "n": self.n,
            "order": self.fingerprint.order,
            "rank": self.rank,
            "N2": self.betti.N2,
            "N3": self.betti.N3,
            "epsilon": self.betti.epsilon,
            "b2": self.b2,
            "b3": self.betti.b3,
            "pi1": self.pi1.name,
            "pi1_fingerprint": self.pi1.to_dict(),
            "gate": self.gate.value,
        }
        out.update(self.extra)
        return out


def invariant_record(g: ActionGroup, n: int | None = None, named: bool = True) -> InvariantRecord:
    n = g.n if n is None else n
    betti = betti_data(g, n)
    fp = g.fingerprint() if named else g.table.fingerprint
    if named:
        pi1 = pi1_regular_locus(g, n)
    else:
        mask = g.table.normal_closure(qualifying_indices(g))
        pi1 = g.table.quotient(mask).fingerprint
    gate = Gate.STRICTLY_CANONICAL if betti.N2 + betti.N3 > 0 else Gate.TERMINAL
    return InvariantRecord(fp, g.g0_name, g.model.name if g.model else None, n, betti, pi1, gate)


def invariant_key(g: ActionGroup) -> tuple:
    """Unnamed invariant string, cheap enough for deduplicating enumerations."""
    return invariant_record(g, named=False).key()
