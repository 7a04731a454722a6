"""Fixed loci of induced automorphisms on A and on K_2(A).

A point of K_2(A) over a cycle x + y + z (sum 0) is one of
    triple      three distinct support points,
    curve-fiber support x, x, y with x != y, plus a tangent direction at x,
    punctual    support x, x, x, plus either m^2 or a point of P(V*).
Points of P(V*) are stored as the kernel line in V, so every datum is a line
in C^2 moved by the complex linear part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .algebra import (
    ALL_LINES,
    CONTINUUM,
    IntMatrix,
    Line,
    TorusPoint,
    apply_to_line,
    eigen_lines,
    format_cyc,
    lcm_all,
    solve_congruence,
)
from .groups import ActionGroup, AffineSymplectomorphism
from .invariants import Tag, element_tags, qualify

TRIPLE = "triple"
CURVE = "curve-fiber"
PUNCTUAL = "punctual"
M2 = "m-squared"
WHOLE_FIBER = "whole-fiber"

_VARIANT_CODE = {TRIPLE: 0, CURVE: 1, PUNCTUAL: 2}


@dataclass(frozen=True)
class KummerPoint:
    variant: str
    support: tuple[TorusPoint, ...]
    datum: tuple = ()

    def __post_init__(self) -> None:
        pts = tuple(sorted(self.support))
        object.__setattr__(self, "support", pts)
        total = pts[0] + pts[1] + pts[2]
        if not total.is_zero():
            raise ValueError("support does not sum to zero")
        distinct = len(set(pts))
        if self.variant == TRIPLE and distinct != 3:
            raise ValueError("triple needs three distinct points")
        if self.variant == CURVE and distinct != 2:
            raise ValueError("curve-fiber point needs support x, x, y")
        if self.variant == PUNCTUAL and distinct != 1:
            raise ValueError("punctual point needs support x, x, x")

    def sort_key(self) -> tuple:
        return (_VARIANT_CODE[self.variant], self.support, repr(self.datum))

    def __lt__(self, other: KummerPoint) -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def base(self) -> TorusPoint:
        """The repeated support point for curve-fiber and punctual points."""
        pts = self.support
        return pts[1] if self.variant == CURVE else pts[0]

    @property
    def line(self) -> Line | None:
        return self.datum if len(self.datum) == 2 and not isinstance(self.datum[0], str) else None

    @property
    def is_m2(self) -> bool:
        return self.variant == PUNCTUAL and self.datum == (M2,)

    def transform(self, g: AffineSymplectomorphism) -> KummerPoint:
        pts = tuple(g.apply(p) for p in self.support)
        datum = self.datum
        if self.line is not None:
            datum = apply_to_line(g.linear.cx_matrix, self.line)
        return KummerPoint(self.variant, pts, datum)

    def describe(self) -> str:
        pts = ", ".join(str(p) for p in self.support)
        if self.variant == TRIPLE:
            return f"[{pts}]"
        tail = "m^2" if self.is_m2 else ("[" + ":".join(format_cyc(c) for c in self.line) + "]" if self.line else "")
        return f"[{pts}] {tail}".strip()


@dataclass(frozen=True)
class FixedSurface:
    element: AffineSymplectomorphism
    tag: Tag

    @property
    def transversal_type(self) -> str:
        return "A1" if self.tag == Tag.INVOLUTION else "A2"

    @property
    def pattern(self) -> str:
        if self.tag == Tag.INVOLUTION:
            return f"[(x, -x+b, -b)], b = {self.element.translation}"
        return "[(x, g(x), g^2(x))]"


# ---------------------------------------------------------------------------
# fixed points on A


EMPTY = frozenset()


def fix_on_A(g: AffineSymplectomorphism):
    """Solutions of g(x) = x on A: a frozenset of points, or CONTINUUM for the identity."""
    m = g.linear.int_matrix - IntMatrix.identity(4)
    rhs = tuple(-c for c in g.translation.as_point().coords)
    return solve_congruence(m, rhs)


def _power(g: AffineSymplectomorphism, k: int) -> AffineSymplectomorphism:
    out = AffineSymplectomorphism.identity(g.modulus)
    for _ in range(k):
        out = out @ g
    return out


# ---------------------------------------------------------------------------
# fixed points on K_2(A)


@dataclass
class K2FixedLocus:
    element: AffineSymplectomorphism
    points: list[KummerPoint]
    surfaces: list[FixedSurface]


def fixed_points_on_K2(g: AffineSymplectomorphism) -> K2FixedLocus:
    """Isolated fixed points of g on K_2(A), plus its fixed surface if g qualifies."""
    if g.modulus != 3:
        raise ValueError("pointwise enumeration is implemented for K_2(A) only")
    if g.is_identity():
        raise ValueError("the identity fixes everything")
    tag = qualify(g, 2).tag
    surfaces = [FixedSurface(g, tag)] if tag != Tag.NONE else []
    ident = IntMatrix.identity(4)
    mz = g.linear.int_matrix
    mc = g.linear.cx_matrix
    fix1 = fix_on_A(g)
    fix1 = frozenset() if fix1 is CONTINUUM else fix1
    g2, g3 = _power(g, 2), _power(g, 3)
    out: set[KummerPoint] = set()

    # orbit type {1,1,1}
    pts = sorted(fix1)
    for a, b in combinations(pts, 2):
        c = -(a + b)
        if c > b and c in fix1:
            out.add(KummerPoint(TRIPLE, (a, b, c)))

    # orbit type {1,2}
    if not g2.is_identity():
        fix2 = fix_on_A(g2)
        for y in sorted(fix2 - fix1):
            x = -(y + g.apply(y))
            if x in fix1:
                out.add(KummerPoint(TRIPLE, (x, y, g.apply(y))))

    # orbit type {3}
    if g3.is_identity():
        lhs = ident + mz + mz @ mz
        shift = g.translation.as_point()
        rhs = tuple(-c for c in (shift.transform(mz) + shift * 2).coords)
        sols = solve_congruence(lhs, rhs)
        if sols is not CONTINUUM:
            for y in sols:
                gy = g.apply(y)
                if gy != y:
                    out.add(KummerPoint(TRIPLE, (y, gy, g.apply(gy))))
    else:
        fix3 = fix_on_A(g3)
        for y in sorted(fix3 - fix1):
            gy = g.apply(y)
            ggy = g.apply(gy)
            if (y + gy + ggy).is_zero():
                out.add(KummerPoint(TRIPLE, (y, gy, ggy)))

    # non-reduced cycles
    order = mc.order()
    lines = eigen_lines(mc)
    for x in pts:
        if not (x * 3).is_zero():
            # fiber P(T_x A) over 2x + y, y = -2x
            if lines is ALL_LINES:
                continue  # the whole fiber lies on the surface of the involution
            for _, ln in lines:
                out.add(KummerPoint(CURVE, (x, x, -(x * 2)), ln))
        else:
            if order == 3:
                continue  # two lines through m^2, both on the order-3 surface
            out.add(KummerPoint(PUNCTUAL, (x, x, x), (M2,)))
            if order in (4, 6):
                for _, ln in lines:
                    out.add(KummerPoint(PUNCTUAL, (x, x, x), ln))
    return K2FixedLocus(g, sorted(out), surfaces)


def surface_membership(z: KummerPoint, surface: FixedSurface) -> bool:
    """Whether an h-fixed point z lies on the fixed surface F_h."""
    h = surface.element
    if surface.tag == Tag.INVOLUTION:
        beta = h.translation.as_point()
        if z.variant == TRIPLE:
            return (-beta) in z.support
        if z.variant == CURVE:
            return True
        return not z.is_m2
    if surface.tag == Tag.ORDER3:
        if z.variant == TRIPLE:
            return all(h.apply(p) != p for p in z.support)
        if z.variant == CURVE:
            return False
        return True
    return False


# ---------------------------------------------------------------------------
# integer encoding of points for orbit computations


class PointCodec:
    """Encodes Kummer points as integer rows so a whole group acts at once.

    Row layout: (variant, p0, p1, p2, line) with sorted support codes, and
    line = -1 for no datum or m^2.
    """

    def __init__(self, group: ActionGroup, points: list[KummerPoint]):
        self.group = group
        ctx = group.context
        dens = [p.denominator for z in points for p in z.support]
        self.D = lcm_all(dens + [ctx.modulus])
        self.scale = self.D // ctx.modulus
        lines: list[Line] = []
        index: dict[Line, int] = {}
        frontier = [z.line for z in points if z.line is not None]
        while frontier:
            nxt = []
            for ln in frontier:
                if ln in index:
                    continue
                index[ln] = len(lines)
                lines.append(ln)
                for lp in ctx.linears:
                    nxt.append(apply_to_line(lp.cx_matrix, ln))
            frontier = nxt
        self.lines = lines
        self.line_index = index
        self.lact = np.array(
            [[index[apply_to_line(lp.cx_matrix, ln)] for ln in lines] for lp in ctx.linears], dtype=np.int64
        ).reshape(ctx.nL, len(lines))
        codes = group.codes
        self.mats = ctx.mats[codes % ctx.nL]
        self.shifts = ctx.tcoords[codes // ctx.nL] * self.scale
        self.lin = codes % ctx.nL
        self._w = np.array([self.D**3, self.D**2, self.D, 1], dtype=np.int64)

    def point_coords(self, p: TorusPoint) -> np.ndarray:
        return np.array([int(c * self.D) for c in p.coords], dtype=np.int64)

    def encode(self, z: KummerPoint) -> np.ndarray:
        pcs = sorted(int(self.point_coords(p) @ self._w) for p in z.support)
        line = self.line_index[z.line] if z.line is not None else -1
        return np.array([_VARIANT_CODE[z.variant], *pcs, line], dtype=np.int64)

    def images(self, z: KummerPoint) -> np.ndarray:
        """Rows of g.z for every element g of the group, in element order."""
        pts = np.stack([self.point_coords(p) for p in z.support])  # 3 x 4
        img = np.einsum("gij,pj->gpi", self.mats, pts) + self.shifts[:, None, :]
        img = np.mod(img, self.D)
        pc = np.sort(img @ self._w, axis=1)
        out = np.empty((len(self.mats), 5), dtype=np.int64)
        out[:, 0] = _VARIANT_CODE[z.variant]
        out[:, 1:4] = pc
        if z.line is not None:
            out[:, 4] = self.lact[self.lin, self.line_index[z.line]]
        else:
            out[:, 4] = -1
        return out


# ---------------------------------------------------------------------------
# stabilizers and orbits


@dataclass
class StabilizerReport:
    point: KummerPoint
    stabilizer: ActionGroup
    orbit_size: int
    surfaces: list[FixedSurface]
    surface_orbits: list[list[int]] = field(default_factory=list)
    surface_classes: list[int] = field(default_factory=list)

    @property
    def transversal_types(self) -> tuple[str, ...]:
        """Sorted transversal types of the stabilizer-orbits of surfaces through the point."""
        return tuple(sorted(self.surfaces[o[0]].transversal_type for o in self.surface_orbits))

    @cached_property
    def isotropy(self):
        return self.stabilizer.fingerprint()

    @property
    def is_isolated(self) -> bool:
        return not self.surfaces

    @cached_property
    def kind(self) -> str:
        """For cyclic stabilizers of order 3: translation, qualifying or non-linear."""
        st = self.stabilizer
        if st.order != 3:
            return ""
        if st.order_tr == 3:
            return "translation"
        tags = element_tags(st)
        return "qualifying" if (tags == 2).any() else "non-linear"


def _surface_key(group: ActionGroup, idx: int) -> int:
    """Index of the least generator of <h>, identifying F_h = F_{h^-1}."""
    tg = group.table
    return int(min(idx, tg.inv[idx]))


class Census:
    """All G-orbits of points of K_2(A) that are isolated fixed points of some element."""

    def __init__(self, group: ActionGroup):
        if group.n != 2:
            raise ValueError("the pointwise census is implemented for K_2(A)")
        self.group = group
        tg = group.table
        reps = [int(c[0]) for c in tg.classes if int(c[0]) != tg.e]
        self.loci = {r: fixed_points_on_K2(group.element(r)) for r in reps}
        candidates = sorted({z for loc in self.loci.values() for z in loc.points})
        self.codec = PointCodec(group, candidates)
        self.tags = element_tags(group)
        self.qualifying_classes = self._qualifying_classes()
        seen: set[bytes] = set()
        reports: list[StabilizerReport] = []
        for z in candidates:
            imgs = self.codec.images(z)
            uniq = np.unique(imgs, axis=0)
            key = uniq[0].tobytes()
            if key in seen:
                continue
            seen.add(key)
            row = self.codec.encode(z)
            stab_idx = np.nonzero((imgs == row).all(axis=1))[0]
            if len(uniq) * len(stab_idx) != group.order:
                raise AssertionError("orbit-stabilizer mismatch")
            reports.append(self._report(z, stab_idx, len(uniq)))
        self.reports = reports

    def _qualifying_classes(self) -> dict[int, int]:
        """Surface key -> index of its G-class among the qualifying cyclic subgroups."""
        tg = self.group.table
        keys = sorted({_surface_key(self.group, int(i)) for i in np.nonzero(self.tags > 0)[0]})
        classes: dict[int, int] = {}
        labels: dict[tuple, int] = {}
        for k in keys:
            lab = tuple(sorted({int(tg.class_labels[k]), int(tg.class_labels[tg.inv[k]])}))
            classes[k] = labels.setdefault(lab, len(labels))
        return classes

    def _report(self, z: KummerPoint, stab_idx: np.ndarray, orbit_size: int) -> StabilizerReport:
        g = self.group
        tg = g.table
        stab = g.subgroup(stab_idx)
        surf_keys: list[int] = []
        surfaces: list[FixedSurface] = []
        for i in stab_idx:
            t = self.tags[i]
            if t == 0:
                continue
            k = _surface_key(g, int(i))
            if k in surf_keys:
                continue
            surf = FixedSurface(g.element(k), Tag.INVOLUTION if t == 1 else Tag.ORDER3)
            if surface_membership(z, surf):
                surf_keys.append(k)
                surfaces.append(surf)
        # orbits of the stabilizer on the surfaces through z, by conjugation
        orbits: list[list[int]] = []
        assigned = [-1] * len(surf_keys)
        for a, k in enumerate(surf_keys):
            if assigned[a] >= 0:
                continue
            conj = {_surface_key(g, int(tg.conj[s, k])) for s in stab_idx}
            members = [b for b, kb in enumerate(surf_keys) if kb in conj]
            for b in members:
                assigned[b] = len(orbits)
            orbits.append(members)
        classes = sorted({self.qualifying_classes[k] for k in surf_keys})
        return StabilizerReport(z, stab, orbit_size, surfaces, orbits, classes)

    def orbit_counts(self) -> dict[tuple, int]:
        out: dict[tuple, int] = {}
        for r in self.reports:
            key = (r.isotropy.catalogue_id or r.isotropy.name, r.transversal_types, r.kind)
            out[key] = out.get(key, 0) + 1
        return out


def stabilizer_census(group: ActionGroup) -> Census:
    return Census(group)


def group_fixed_points(group: ActionGroup) -> list[KummerPoint]:
    """Isolated points of K_2(A) fixed by every element of the group."""
    gens = group.generators()
    if not gens:
        raise ValueError("the trivial group fixes everything")
    first = group.context.decode(gens[0])
    pts = fixed_points_on_K2(first).points
    others = [group.context.decode(c) for c in gens[1:]]
    return [z for z in pts if all(z.transform(h) == z for h in others)]


@dataclass
class FixedLociRow:
    g0: str
    surfaces: int
    points: int
    split: dict[tuple[bool, int], int]


def fixed_loci_row(group: ActionGroup) -> FixedLociRow:
    """G-fixed surfaces and isolated points, with their position relative to the surfaces F_h.

    Points are split by (on F_-id, number of order-3 cyclic subgroups <h> of G with z on F_h).
    """
    gens = group.generators()
    surfaces = 0
    if len(gens) == 1:
        surfaces = len(fixed_points_on_K2(group.context.decode(gens[0])).surfaces)
    pts = group_fixed_points(group)
    tags = element_tags(group)
    split: dict[tuple[bool, int], int] = {}
    for z in pts:
        on_minus = False
        order3: set[int] = set()
        for i in np.nonzero(tags > 0)[0]:
            h = group.element(int(i))
            surf = FixedSurface(h, Tag.INVOLUTION if tags[i] == 1 else Tag.ORDER3)
            if not surface_membership(z, surf):
                continue
            if tags[i] == 1:
                on_minus = on_minus or h.linear.is_minus_identity()
            else:
                order3.add(_surface_key(group, int(i)))
        key = (on_minus, len(order3))
        split[key] = split.get(key, 0) + 1
    return FixedLociRow(group.g0_name, surfaces, len(pts), dict(sorted(split.items())))
