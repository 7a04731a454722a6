"""Named witness groups used to label fingerprints.

Each entry carries permutation generators; its Cayley table is built on
first use. Matching compares fingerprints and, up to order 128, confirms
with an explicit isomorphism.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache, cached_property
from importlib import resources

from .groups import GroupFingerprint, TableGroup, is_isomorphic, parse_cycles, table_from_permutations


@dataclass(frozen=True)
class CatalogueEntry:
    id: str
    names: tuple[str, ...]
    degree: int
    generators: tuple[str, ...]

    @property
    def order(self) -> int:
        return int(self.id.split(",")[0])

    @property
    def name(self) -> str:
        return self.names[0]

    @cached_property
    def table(self) -> TableGroup:
        deg = max(self.degree, 1)
        return table_from_permutations([parse_cycles(g, deg) for g in self.generators], deg)


@cache
def load_catalogue() -> tuple[CatalogueEntry, ...]:
    raw = json.loads(resources.files("terminvar.data").joinpath("catalogue.json").read_text(encoding="utf-8"))
    return tuple(
        CatalogueEntry(g["id"], tuple(g["names"]), int(g["degree"]), tuple(g["generators"])) for g in raw["groups"]
    )


@cache
def entry_by_id(gid: str) -> CatalogueEntry | None:
    return next((e for e in load_catalogue() if e.id == gid), None)


@cache
def id_for_name(name: str) -> str | None:
    """SmallGroup-style id of a catalogue name, or None."""
    for e in load_catalogue():
        if name in e.names:
            return e.id
    return None


def identify(tg: TableGroup) -> CatalogueEntry | None:
    key = tg.fingerprint.key()
    hits = [e for e in load_catalogue() if e.order == tg.n and e.table.fingerprint.key() == key]
    if tg.n <= 128:
        hits = [e for e in hits if is_isomorphic(e.table, tg)]
    if len(hits) == 1:
        return hits[0]
    return None


def name_group(tg: TableGroup) -> GroupFingerprint:
    """Fingerprint of ``tg`` with its catalogue name when one matches."""
    hit = identify(tg)
    fp = tg.fingerprint
    return fp.with_name(hit.name, hit.id) if hit is not None else fp


def same_group(fp: GroupFingerprint, name: str) -> bool:
    """Whether a named fingerprint denotes the catalogue group ``name``."""
    gid = id_for_name(name)
    return gid is not None and fp.catalogue_id == gid
