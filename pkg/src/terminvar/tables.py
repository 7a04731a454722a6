"""Expected table data, row by row, with the caption of the source table."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from importlib import resources

CAPTION_K2 = "Terminalizations of K_2(A)/G"
CAPTION_K2_SING = "Terminalizations of K_2(A)/G with simply connected regular locus"
CAPTION_K3_SING = "Terminalizations of K_3(A)/G with simply connected regular locus"
CAPTION_HILB = "Terminalizations of S^[2]/G"
CAPTION_FIXED = "Fixed loci of some linear actions on K_2(A)"


@dataclass(frozen=True)
class K2Row:
    key: str  # catalogue key, "ID" or "ID#k" for repeated ids
    gid: str
    alias: str
    g0: str
    rank: int
    N2: int
    N3: int
    b2: int
    pi1: str

    @property
    def simply_connected(self) -> bool:
        return self.pi1 == "{1}"


def _k2_rows() -> tuple[K2Row, ...]:
    raw = [
        # G0 = C2, rank 7
        ("2,1", "C2", "C2", 7, 1, 0, 8, "{1}"),
        ("6,1", "C3⋊C2", "C2", 7, 1, 0, 8, "{1}"),
        ("18,4", "C3^2⋊_2C2", "C2", 7, 1, 0, 8, "{1}"),
        ("54,14", "C3^3⋊C2", "C2", 7, 1, 0, 8, "{1}"),
        ("162,54", "C3^4⋊C2", "C2", 7, 1, 0, 8, "{1}"),
        # G0 = C3, rank 5
        ("3,1", "C3", "C3", 5, 0, 0, 5, "C3"),
        ("3,1", "C3", "C3", 5, 0, 1, 7, "{1}"),
        ("9,2", "C3^2", "C3", 5, 0, 0, 5, "C3^2"),
        ("9,2", "C3^2", "C3", 5, 0, 3, 11, "{1}"),
        ("27,3", "C3^2⋊C3", "C3", 5, 0, 0, 5, "C3^2⋊C3"),
        ("27,3", "C3^2⋊C3", "C3", 5, 0, 1, 7, "C3"),
        ("27,5", "C3^3", "C3", 5, 0, 0, 5, "C3^3"),
        ("27,5", "C3^3", "C3", 5, 0, 9, 23, "{1}"),
        ("81,12", "C3^3⋊_2C3", "C3", 5, 0, 0, 5, "C3^3⋊_2C3"),
        ("81,12", "C3^3⋊_2C3", "C3", 5, 0, 3, 11, "C3"),
        ("243,37", "C3^4⋊_1C3", "C3", 5, 0, 1, 7, "C3^2"),
        # G0 = C4, rank 5
        ("4,1", "C4", "C4", 5, 1, 0, 6, "C2"),
        ("36,9", "C3^2⋊C4", "C4", 5, 1, 0, 6, "C2"),
        ("324,164", "C3^4⋊_4C4", "C4", 5, 1, 0, 6, "C2"),
        # G0 = C6, rank 5
        ("6,2", "C6", "C6", 5, 1, 1, 8, "{1}"),
        ("18,3", "C3⋊C6", "C6", 5, 1, 2, 10, "{1}"),
        ("54,13", "C3^2⋊_4C6", "C6", 5, 1, 5, 16, "{1}"),
        ("54,5", "C3^2⋊C6", "C6", 5, 1, 1, 8, "{1}"),
        ("162,40", "C3^3⋊_4C6", "C6", 5, 1, 2, 10, "{1}"),
        ("486,146", "C3^4⋊_4C6", "C6", 5, 1, 1, 8, "{1}"),
        # G0 = Q8, rank 4
        ("8,4", "Q8", "Q8", 4, 1, 0, 5, "C2^2"),
        ("72,41", "C3^2⋊Q8", "Q8", 4, 1, 0, 5, "C2^2"),
        ("648,730", "C3^4⋊Q8", "Q8", 4, 1, 0, 5, "C2^2"),
        # G0 = BD12, rank 4, b2 carries the -1 correction
        ("12,1", "BD12", "BD12", 4, 1, 1, 6, "C2"),
        ("108,37", "C3^2⋊_3BD12", "BD12", 4, 1, 3, 10, "C2"),
        ("972,NA", "C3^4⋊_*BD12", "BD12", 4, 1, 1, 6, "C2"),
        # G0 = BT24, rank 4
        ("24,3", "BT24", "BT24", 4, 1, 1, 7, "{1}"),
        ("216,153", "C3^2⋊BT24", "BT24", 4, 1, 1, 7, "{1}"),
        ("1944,NA", "C3^4⋊_*BT24", "BT24", 4, 1, 1, 7, "{1}"),
    ]
    seen: dict[str, int] = {}
    out = []
    for gid, *rest in raw:
        seen[gid] = seen.get(gid, 0) + 1
        out.append((gid, seen[gid], rest))
    counts = {gid: seen[gid] for gid in seen}
    rows = []
    for gid, k, rest in out:
        key = gid if counts[gid] == 1 else f"{gid}#{k}"
        rows.append(K2Row(key, gid, *rest))
    return tuple(rows)


K2_TABLE: tuple[K2Row, ...] = _k2_rows()


@dataclass(frozen=True)
class K2SingRow:
    gid: str
    alias: str
    N2: int
    N3: int
    b2: int
    a2: int
    a3: int
    a4: int
    b4: int
    chi: int
    c4: Fraction
    c2sq: Fraction

    @property
    def catalog_key(self) -> str:
        """Key of the simply connected row with this id in the K_2(A) table."""
        for r in K2_TABLE:
            if r.gid == self.gid and r.simply_connected:
                return r.key
        raise KeyError(self.gid)


def _q(x: str | int) -> Fraction:
    return Fraction(x)


K2_SING_TABLE: tuple[K2SingRow, ...] = tuple(
    K2SingRow(gid, alias, n2, n3, b2, a2, a3, a4, b4, chi, _q(c4), _q(c2))
    for gid, alias, n2, n3, b2, a2, a3, a4, b4, chi, c4, c2 in [
        ("2,1", "C2", 1, 0, 8, 36, 0, 0, 90, 108, 90, 480),
        ("6,1", "C3⋊C2", 1, 0, 8, 36, 13, 0, 64, 82, "166/3", "712/3"),
        ("18,4", "C3^2⋊_2C2", 1, 0, 8, 36, 16, 0, 58, 76, "142/3", "544/3"),
        ("54,14", "C3^3⋊C2", 1, 0, 8, 36, 13, 0, 64, 82, "166/3", "712/3"),
        ("162,54", "C3^4⋊C2", 1, 0, 8, 36, 0, 0, 90, 108, 90, 480),
        ("3,1", "C3", 0, 1, 7, 0, 12, 0, 92, 108, 100, 540),
        ("9,2", "C3^2", 0, 3, 11, 0, 15, 0, 126, 150, 140, 500),
        ("27,5", "C3^3", 0, 9, 23, 0, 0, 0, 276, 324, 324, 828),
        ("6,2", "C6", 1, 1, 8, 28, 12, 0, 74, 92, 70, 320),
        ("18,3", "C3⋊C6", 1, 2, 10, 28, 12, 0, 94, 116, 94, 328),
        ("54,13", "C3^2⋊_4C6", 1, 5, 16, 28, 0, 0, 178, 212, 198, 576),
        ("54,5", "C3^2⋊C6", 1, 1, 8, 28, 20, 0, 58, 76, "146/3", "512/3"),
        ("162,40", "C3^3⋊_4C6", 1, 2, 10, 28, 12, 0, 94, 116, 94, 328),
        ("486,146", "C3^4⋊_4C6", 1, 1, 8, 28, 12, 0, 74, 92, 70, 320),
        ("24,3", "BT24", 1, 1, 7, 20, 12, 3, 63, 79, "235/4", 275),
        ("216,153", "C3^2⋊BT24", 1, 1, 7, 20, 16, 3, 55, 71, "577/12", "601/3"),
        ("1944,NA", "C3^4⋊_*BT24", 1, 1, 7, 20, 12, 3, 63, 79, "235/4", 275),
    ]
)


@dataclass(frozen=True)
class K3SingRow:
    gid: str
    alias: str
    i: int  # G = C2^i x <-id>
    N2: int
    b2: int
    a2: int
    s2: int


K3_SING_TABLE: tuple[K3SingRow, ...] = (
    K3SingRow("2,1", "<-id>", 0, 1, 8, 140, 0),
    K3SingRow("4,2", "C2×<-id>", 1, 2, 9, 112, 7),
    K3SingRow("8,5", "C2^2×<-id>", 2, 4, 11, 64, 18),
    K3SingRow("16,14", "C2^3×<-id>", 3, 8, 15, 0, 28),
    K3SingRow("32,51", "C2^4×<-id>", 4, 16, 23, 0, 0),
)


@dataclass(frozen=True)
class FixedLociExpected:
    g0: str
    model: str
    surfaces: int
    points: int
    split: tuple[tuple[tuple[bool, int], int], ...]  # ((on F_-id, order-3 surfaces through it), count)
    description: tuple[str, ...]


FIXED_LOCI_TABLE: tuple[FixedLociExpected, ...] = (
    FixedLociExpected("C2", "generic", 1, 36, (((False, 0), 36),), ("36 pts not in F_-id",)),
    FixedLociExpected("C3", "e2-zeta3", 1, 12, (((False, 0), 12),), ("12 pts not in F_g3",)),
    FixedLociExpected(
        "C4", "e2-i", 0, 16, (((False, 0), 8), ((True, 0), 8)), ("8 pts in F_-id", "8 pts not in F_-id")
    ),
    FixedLociExpected(
        "C6",
        "e2-zeta6",
        0,
        12,
        (((False, 1), 6), ((True, 0), 4), ((True, 1), 2)),
        ("2 pts = F_-id ∩ F_g3", "4 pts in F_-id \\ F_g3", "6 pts in F_g3 \\ F_-id"),
    ),
    FixedLociExpected(
        "BT24", "quaternionic", 0, 2, (((False, 4), 2),), ("2 pts = intersection of F_g over ord(g) = 3",)
    ),
)


@dataclass(frozen=True)
class HilbRow:
    gid: str
    alias: str
    rank: int
    degree: int
    generators: tuple[str, ...]
    N2: int
    b2: int
    pi1: str


@cache
def hilb_table() -> tuple[HilbRow, ...]:
    text = resources.files("terminvar.data").joinpath("hilb2.csv").read_text(encoding="utf-8")
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        gens = tuple(g for g in rec["generators"].split(";") if g.strip())
        rows.append(
            HilbRow(
                rec["group_id"],
                rec["alias"],
                int(rec["rank"]),
                int(rec["perm_degree"]) if rec["perm_degree"] else 0,
                gens,
                int(rec["expected_N2"]),
                int(rec["expected_b2"]),
                rec["expected_pi1"],
            )
        )
    return tuple(rows)


TABLE_NAMES = ("kummer-n2", "kummer-n2-sing", "kummer-n3-sing", "hilb2", "fixed-loci")

CAPTIONS = {
    "kummer-n2": CAPTION_K2,
    "kummer-n2-sing": CAPTION_K2_SING,
    "kummer-n3-sing": CAPTION_K3_SING,
    "hilb2": CAPTION_HILB,
    "fixed-loci": CAPTION_FIXED,
}


def k2_row(key: str) -> K2Row:
    for r in K2_TABLE:
        if r.key == key:
            return r
    raise KeyError(f"no row {key!r} in the K_2(A) table")
