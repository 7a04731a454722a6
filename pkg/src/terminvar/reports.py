"""Computed table rows, comparison against expected data, and emission."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .actions import action_group
from .algebra import format_rational
from .fixedloci import fixed_loci_row
from .groups import parse_spec
from .hilb import PermGroup, hilb_invariants
from .invariants import invariant_record
from .models import G0_GENERATORS
from .singularities import census_n2, census_n3, n3_exponent
from .tables import (
    CAPTIONS,
    FIXED_LOCI_TABLE,
    K2_SING_TABLE,
    K2_TABLE,
    K3_SING_TABLE,
    TABLE_NAMES,
    hilb_table,
)
from .topology import topology_n2

COLUMNS = {
    "kummer-n2": ["ID", "G", "G0", "rank", "N2", "N3", "b2", "pi1"],
    "kummer-n2-sing": ["ID", "G", "N2", "N3", "b2", "a2", "a3", "a4", "b4", "chi", "c4", "c2sq"],
    "kummer-n3-sing": ["ID", "G", "N2", "b2", "a2", "s2"],
    "hilb2": ["ID", "G", "rank", "N2", "b2", "pi1"],
    "fixed-loci": ["G", "surfaces", "points", "split"],
}
# columns that are labels rather than computed cells
LABELS = {"ID", "G"}


def _cell(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    return str(x)


def _split_text(split) -> str:
    parts = []
    for (on_minus, k), n in split:
        where = ("F_-id" if on_minus else "not F_-id") + (f", {k} order-3 F_g" if k else "")
        parts.append(f"{n} [{where}]")
    return "; ".join(parts)


# ---------------------------------------------------------------------------
# expected rows


def expected_rows(name: str) -> list[dict]:
    if name == "kummer-n2":
        return [
            {"ID": r.key, "G": r.alias, "G0": r.g0, "rank": r.rank, "N2": r.N2, "N3": r.N3, "b2": r.b2, "pi1": r.pi1}
            for r in K2_TABLE
        ]
    if name == "kummer-n2-sing":
        return [
            {
                "ID": r.gid, "G": r.alias, "N2": r.N2, "N3": r.N3, "b2": r.b2, "a2": r.a2, "a3": r.a3, "a4": r.a4,
                "b4": r.b4, "chi": r.chi, "c4": r.c4, "c2sq": r.c2sq,
            }
            for r in K2_SING_TABLE
        ]
    if name == "kummer-n3-sing":
        return [{"ID": r.gid, "G": r.alias, "N2": r.N2, "b2": r.b2, "a2": r.a2, "s2": r.s2} for r in K3_SING_TABLE]
    if name == "hilb2":
        return [
            {"ID": r.gid, "G": r.alias, "rank": r.rank, "N2": r.N2, "b2": r.b2, "pi1": r.pi1} for r in hilb_table()
        ]
    if name == "fixed-loci":
        return [
            {"G": r.g0, "surfaces": r.surfaces, "points": r.points, "split": _split_text(r.split)}
            for r in FIXED_LOCI_TABLE
        ]
    raise KeyError(name)


# ---------------------------------------------------------------------------
# computed rows, one task per row so rows can run in a worker pool


def _compute(task: tuple[str, int]) -> dict:
    name, idx = task
    if name == "kummer-n2":
        r = K2_TABLE[idx]
        rec = invariant_record(action_group(f"k2/{r.key}"))
        return {
            "ID": r.key, "G": r.alias, "G0": rec.g0, "rank": rec.rank, "N2": rec.betti.N2, "N3": rec.betti.N3,
            "b2": rec.b2, "pi1": rec.pi1.name,
        }
    if name == "kummer-n2-sing":
        r = K2_SING_TABLE[idx]
        g = action_group(f"k2/{r.catalog_key}")
        rec = invariant_record(g)
        c = census_n2(g)
        top = topology_n2(rec.b2, 0, c.a2, c.a3, c.a4)
        return {
            "ID": r.gid, "G": r.alias, "N2": rec.betti.N2, "N3": rec.betti.N3, "b2": rec.b2, "a2": c.a2,
            "a3": c.a3, "a4": c.a4, "b4": top.b4, "chi": top.chi, "c4": top.c4, "c2sq": top.c2sq,
        }
    if name == "kummer-n3-sing":
        r = K3_SING_TABLE[idx]
        g = action_group(f"k3/{r.gid}")
        rec = invariant_record(g)
        c = census_n3(n3_exponent(g))
        return {"ID": r.gid, "G": r.alias, "N2": rec.betti.N2, "b2": rec.b2, "a2": c.a2, "s2": c.s2}
    if name == "hilb2":
        r = hilb_table()[idx]
        rec = hilb_invariants(PermGroup.from_cycles(r.generators, r.degree), r.rank, r.gid)
        return {"ID": r.gid, "G": r.alias, "rank": r.rank, "N2": rec.N2, "b2": rec.b2, "pi1": rec.pi1.name}
    if name == "fixed-loci":
        r = FIXED_LOCI_TABLE[idx]
        g = parse_spec({"model": r.model, "n": 2, "generators": [{"m": s} for s in G0_GENERATORS[r.g0]]})
        row = fixed_loci_row(g)
        return {
            "G": row.g0, "surfaces": row.surfaces, "points": row.points,
            "split": _split_text(tuple(row.split.items())),
        }
    raise KeyError(name)


def row_count(name: str) -> int:
    return len(expected_rows(name))


def computed_rows(name: str, jobs: int = 1) -> list[dict]:
    if name not in TABLE_NAMES:
        raise KeyError(name)
    tasks = [(name, i) for i in range(row_count(name))]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_compute, tasks))
    return [_compute(t) for t in tasks]


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class Mismatch:
    table: str
    row: str
    column: str
    expected: str
    computed: str

    def __str__(self) -> str:
        return f"{self.table} row {self.row} column {self.column}: expected {self.expected}, computed {self.computed}"


@dataclass
class VerifyReport:
    table: str
    caption: str
    rows: int
    cells: int
    mismatches: list[Mismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare(name: str, expected: list[dict], computed: list[dict]) -> VerifyReport:
    cols = [c for c in COLUMNS[name] if c not in LABELS]
    key = "ID" if "ID" in COLUMNS[name] else "G"
    out: list[Mismatch] = []
    cells = 0
    for e, c in zip(expected, computed, strict=True):
        for col in cols:
            cells += 1
            if e[col] != c[col]:
                out.append(Mismatch(name, str(e[key]), col, _cell(e[col]), _cell(c[col])))
    return VerifyReport(name, CAPTIONS[name], len(expected), cells, out)


def verify(name: str, jobs: int = 1) -> VerifyReport:
    return compare(name, expected_rows(name), computed_rows(name, jobs))


# ---------------------------------------------------------------------------
# emission


def emit(name: str, rows: list[dict], fmt: str) -> str:
    cols = COLUMNS[name]
    if fmt == "json":
        payload = {"table": name, "caption": CAPTIONS[name], "rows": [{c: _jsonable(r[c]) for c in cols} for r in rows]}
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue()
    if fmt == "md":
        lines = [f"**{CAPTIONS[name]}**", "", "| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for r in rows:
            lines.append("| " + " | ".join(_cell(r[c]) for c in cols) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x) if x.denominator != 1 else int(x)
    return x
