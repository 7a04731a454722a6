"""Named actions: one generator spec per row of the Kummer tables."""

from __future__ import annotations

import json
from functools import cache
from importlib import resources

from .groups import ActionGroup, parse_spec


@cache
def _load() -> dict:
    return json.loads(resources.files("terminvar.data").joinpath("actions.json").read_text(encoding="utf-8"))


def action_keys(family: str = "k2") -> list[str]:
    return list(_load()[family])


def action_spec(ident: str) -> dict:
    """Spec for 'k2/ID', 'k2/ID#k' or 'k3/ID'; a bare id means k2."""
    family, _, key = ident.rpartition("/")
    family = family or "k2"
    table = _load().get(family)
    if table is None:
        raise KeyError(f"unknown catalogue family {family!r}")
    if key not in table:
        # a repeated id without '#k' is ambiguous
        hits = [k for k in table if k.split("#")[0] == key]
        if len(hits) != 1:
            raise KeyError(f"no unique catalogue row {ident!r}" + (f"; candidates {hits}" if hits else ""))
        key = hits[0]
    return dict(table[key])


def action_group(ident: str) -> ActionGroup:
    return parse_spec(action_spec(ident))
