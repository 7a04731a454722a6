"""Terminalized singularity counts: local-model transfer rules, census and configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .fixedloci import Census, StabilizerReport, stabilizer_census
from .groups import ActionGroup


class UnmatchedLocalModel(ValueError):
    """A point whose isotropy and incidence fit none of the known local models."""


@dataclass(frozen=True)
class LocalModel:
    isotropy: str  # catalogue id "order,k"
    surfaces: tuple[str, ...]  # transversal types of the stabilizer-orbits of surfaces through the point

    @property
    def signature(self) -> str:
        inc = "isolated" if not self.surfaces else "+".join(self.surfaces)
        return f"{self.isotropy}|{inc}"


# (isotropy id, sorted transversal types) -> (a2, a3, a4, local model description)
_RULES: dict[tuple[str, tuple[str, ...]], tuple[tuple[int, int, int], str]] = {
    ("2,1", ()): ((1, 0, 0), "A^4/1/2(1,1,-1,-1)"),
    ("3,1", ()): ((0, 1, 0), "A^4/1/3(1,1,-1,-1)"),
    ("4,1", ()): ((0, 0, 1), "A^4/1/4(1,1,-1,-1)"),
    ("4,1", ("A1",)): ((2, 0, 0), "A^4/1/4(1,-1,2,2)"),
    ("6,2", ("A1",)): ((0, 2, 0), "A^4/1/6(1,-1,3,3)"),
    ("6,2", ("A2",)): ((3, 0, 0), "A^4/1/6(1,-1,2,2)"),
    ("6,2", ("A1", "A2")): ((0, 0, 0), "A^2/C2 x A^2/C3"),
    ("9,2", ("A2", "A2")): ((0, 0, 0), "A^2/C3 x A^2/C3"),
    ("6,1", ("A1",)): ((0, 0, 0), "h+h*/S3"),
    ("18,3", ("A1", "A2")): ((0, 0, 0), "(h x chi)+(h x chi)*/C3xS3"),
    ("24,3", ("A2",)): ((0, 0, 0), "rho+rho*/BT24"),
}


def transfer_rule(model: LocalModel) -> tuple[int, int, int]:
    """Contribution of one singular point of X/G to (a2, a3, a4) of the terminalization."""
    try:
        return _RULES[(model.isotropy, model.surfaces)][0]
    except KeyError:
        raise UnmatchedLocalModel(f"no local model for signature {model.signature}") from None


def is_residual(model: LocalModel) -> bool:
    """Isolated point outside the rule list: terminal already, it survives unchanged."""
    return not model.surfaces and (model.isotropy, ()) not in _RULES


def local_model_name(model: LocalModel) -> str:
    if is_residual(model):
        return f"A^4/G terminal, G = {model.isotropy}"
    try:
        return _RULES[(model.isotropy, model.surfaces)][1]
    except KeyError:
        raise UnmatchedLocalModel(f"no local model for signature {model.signature}") from None


def local_model(report: StabilizerReport) -> LocalModel:
    iso = report.isotropy
    ident = iso.catalogue_id or f"{iso.order},?"
    return LocalModel(ident, report.transversal_types)


@dataclass(frozen=True)
class SingularCensus:
    a2: int
    a3: int
    a4: int
    s2: int = 0
    smooth: bool = False
    # isolated terminal points whose isotropy is not cyclic of order 2, 3 or 4
    other: tuple[tuple[str, int], ...] = ()

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a2, self.a3, self.a4)

    def to_dict(self) -> dict:
        out = {"a2": self.a2, "a3": self.a3, "a4": self.a4, "s2": self.s2, "smooth": self.smooth}
        if self.other:
            out["other"] = {k: v for k, v in self.other}
        return out


def _is_trivial(g: ActionGroup) -> bool:
    return g.order == 1


def census_from(census: Census) -> SingularCensus:
    a = [0, 0, 0]
    other: dict[str, int] = {}
    for rep in census.reports:
        lm = local_model(rep)
        if is_residual(lm):
            other[lm.isotropy] = other.get(lm.isotropy, 0) + 1
            continue
        c = transfer_rule(lm)
        for k in range(3):
            a[k] += c[k]
    smooth = a == [0, 0, 0] and not other
    return SingularCensus(a[0], a[1], a[2], 0, smooth, tuple(sorted(other.items())))


def census_n2(g: ActionGroup) -> SingularCensus:
    if g.n != 2:
        raise ValueError("census_n2 needs an action on K_2(A)")
    if _is_trivial(g):
        return SingularCensus(0, 0, 0, 0, True)
    return census_from(stabilizer_census(g))


def census_n3(i: int) -> SingularCensus:
    """Closed forms for G = C_2^i x <-id> acting on K_3(A)."""
    if not 0 <= i <= 4:
        raise ValueError("i must lie in 0..4")
    p = 2**i
    a2 = 4 * (42 - 7 * p) + 4 * (p - 1) * (p - 2) // 3
    s2 = (p - 1) * (16 - p) // 2
    return SingularCensus(a2, 0, 0, s2, a2 == 0 and s2 == 0)


def _subgroups_of_a2(i: int) -> list[tuple[int, ...]]:
    """One subgroup of A[2] = F_2^4 of rank i, as a list of elements encoded in 0..15."""
    basis = [1 << k for k in range(i)]
    elems = {0}
    for b in basis:
        elems |= {e ^ b for e in elems}
    return [tuple(sorted(elems))]


def census_n3_bruteforce(i: int) -> SingularCensus:
    """Pointwise count of a2 and s2 from the fixed-locus strata, feasible for i <= 2.

    Points of A[2] are 4-bit integers; A[4] points are pairs (2-torsion part, half).
    Isolated fixed points of tau_a(-id) are the cycles {e1..e4} with 2e = a and sum 0;
    such a point lies on W_b iff it splits into two pairs summing to b.
    """
    if not 0 <= i <= 2:
        raise ValueError("brute force is implemented for i <= 2")
    (tr,) = _subgroups_of_a2(i)
    trset = set(tr)

    def halves(a: int) -> list[tuple[int, ...]]:
        # e with 2e = a: e = a/2 + t, t in A[2]; encode as coordinates in (1/4)Z^4 mod 1
        base = tuple(((a >> k) & 1) for k in range(4))  # a/2 in units of 1/4 is a itself
        return [tuple((base[k] + 2 * ((t >> k) & 1)) % 4 for k in range(4)) for t in range(16)]

    def add(*vs):
        return tuple(sum(v[k] for v in vs) % 4 for k in range(4))

    zero = (0, 0, 0, 0)
    points: set[frozenset] = set()
    for a in tr:
        hs = halves(a)
        for quad in combinations(hs, 4):
            if add(*quad) != zero:
                continue
            on_w = False
            for b in tr:
                # b in quarter units is 2*bit
                bv = tuple(2 * ((b >> k) & 1) for k in range(4))
                for p1 in combinations(quad, 2):
                    rest = [q for q in quad if q not in p1]
                    if add(*p1) == bv and add(*rest) == bv:
                        on_w = True
                if on_w:
                    break
            if not on_w:
                points.add(frozenset(quad))
    # orbits under G: translations by tr (quarter units 2*bit) and -id
    def act(pt, t, sign):
        tv = tuple(2 * ((t >> k) & 1) for k in range(4))
        return frozenset(add(tuple((sign * c) % 4 for c in q), tv) for q in pt)

    seen: set[frozenset] = set()
    a2 = 0
    for pt in sorted(points, key=lambda s: sorted(s)):
        if pt in seen:
            continue
        a2 += 1
        for t, sign in product(tr, (1, -1)):
            seen.add(act(pt, t, sign))
    # surfaces V_{g,theta}, g in tr\0, theta mod <g>; G acts trivially on them, and
    # V_{g,theta} lies in W_b exactly for b in {theta, theta+g}
    s2 = 0
    for g in tr:
        if g == 0:
            continue
        classes = {min(th, th ^ g) for th in range(16)}
        s2 += sum(1 for th in classes if th not in trset and (th ^ g) not in trset)
    return SingularCensus(a2, 0, 0, s2, a2 == 0 and s2 == 0)


@dataclass(frozen=True)
class SmoothnessWitness:
    smooth: bool
    reason: str


def smoothness_flag(census: SingularCensus) -> SmoothnessWitness:
    """Smooth terminalization iff no isolated point and no singular surface survives."""
    if census.smooth:
        return SmoothnessWitness(True, "no singular points or surfaces remain")
    parts = [f"{k}={v}" for k, v in zip(("a2", "a3", "a4", "s2"), (census.a2, census.a3, census.a4, census.s2)) if v]
    parts += [f"isolated {k} x{v}" for k, v in census.other]
    return SmoothnessWitness(False, ", ".join(parts))


def n3_exponent(g: ActionGroup) -> int:
    """i with G = C2^i x <-id> on K_3(A); raises if G is not of that form."""
    ctx = g.context
    if g.n != 3 or g.g0_name != "C2":
        raise ValueError("expected G0 = C2 acting on K_3(A)")
    tr = ctx.tcoords[g.translation_index[g.translation_subgroup]]
    if ((tr * 2) % ctx.modulus).any():
        raise ValueError("translations must be 2-torsion")
    minus = next(lp for lp in ctx.linears if lp.is_minus_identity())
    if not g.contains_code(ctx.linear_code(minus)):
        raise ValueError("-id must lie in G")
    return g.order_tr.bit_length() - 1


def census_of(g: ActionGroup) -> SingularCensus:
    """Census for either family in scope."""
    if g.n == 3:
        return census_n3(n3_exponent(g))
    return census_n2(g)


def has_isolated_point(census: Census) -> bool:
    return any(r.is_isolated for r in census.reports)


def smoothness_of(g: ActionGroup) -> SmoothnessWitness:
    """Smoothness even when some surface points fall outside the local-model list.

    An isolated point with nontrivial isotropy is terminal and survives in every
    terminalization, which settles the question without a full census.
    """
    if g.order == 1:
        return SmoothnessWitness(True, "trivial group")
    if g.n == 3:
        return smoothness_flag(census_of(g))
    c = stabilizer_census(g)
    try:
        return smoothness_flag(census_from(c))
    except UnmatchedLocalModel:
        iso = sorted({r.isotropy.catalogue_id or str(r.isotropy.order) for r in c.reports if r.is_isolated})
        if iso:
            return SmoothnessWitness(False, "isolated terminal points with isotropy " + ", ".join(iso))
        raise


# ---------------------------------------------------------------------------
# configuration of the singular locus


@dataclass
class SingularConfiguration:
    surfaces: list[dict]
    points: list[dict]
    census: SingularCensus
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"surfaces": self.surfaces, "points": self.points, "census": self.census.to_dict()}

    def point_counts(self) -> dict[tuple[str, tuple[int, ...]], int]:
        """Number of singular points by (isotropy, surfaces through it)."""
        out: dict[tuple[str, tuple[int, ...]], int] = {}
        for p in self.points:
            key = (p["isotropy"], tuple(p["on_surfaces"]))
            out[key] = out.get(key, 0) + 1
        return out


def configuration_report(g: ActionGroup, census: Census | None = None) -> SingularConfiguration:
    if g.n != 2:
        raise ValueError("configuration reports are implemented for K_2(A)")
    if _is_trivial(g):
        return SingularConfiguration([], [], SingularCensus(0, 0, 0, 0, True))
    census = census or stabilizer_census(g)
    ids: dict[int, str] = {}
    surfaces = []
    tags = census.tags
    for key, cls in sorted(census.qualifying_classes.items(), key=lambda kv: kv[1]):
        if cls in ids.values():
            continue
        sid = f"S{cls}"
        if cls not in [int(s["id"][1:]) for s in surfaces]:
            surfaces.append({"id": sid, "type": "A1" if tags[key] == 1 else "A2"})
    points = []
    for rep in census.reports:
        lm = local_model(rep)
        iso = rep.isotropy
        points.append(
            {
                "isotropy": iso.catalogue_id or f"{iso.order},?",
                "isotropy_name": iso.name,
                "on_surfaces": [f"S{c}" for c in rep.surface_classes],
                "local_model": local_model_name(lm),
                "contribution": [0, 0, 0] if is_residual(lm) else list(transfer_rule(lm)),
                "representative": rep.point.describe(),
            }
        )
    points.sort(key=lambda p: (p["on_surfaces"], p["isotropy"], p["representative"]))
    return SingularConfiguration(surfaces, points, census_from(census))
