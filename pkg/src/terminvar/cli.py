"""Command line interface."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .actions import action_group
from .groups import ActionGroup, SizeCapExceeded, ambient_group, enumerate_subgroups, parse_spec, surjects_onto_g0
from .invariants import invariant_key, invariant_record
from .models import G0_GENERATORS, MODEL_NAMES, build_model
from .reports import computed_rows, emit, verify
from .singularities import (
    UnmatchedLocalModel,
    census_of,
    configuration_report,
    smoothness_of,
)
from .tables import TABLE_NAMES
from .topology import topology_n2

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
LARGE_AMBIENT = 1000


class UsageError(Exception):
    pass


def _load_group(args) -> ActionGroup:
    if args.spec:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                spec = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read spec: {exc}") from exc
        try:
            return parse_spec(spec)
        except (ValueError, KeyError) as exc:
            raise UsageError(str(exc)) from exc
    try:
        return action_group(args.catalog)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc


def full_record(g: ActionGroup) -> dict:
    rec = invariant_record(g)
    out = rec.to_json()
    try:
        census = census_of(g) if g.order > 1 else None
    except UnmatchedLocalModel as exc:
        census = None
        out["census_note"] = str(exc)
    if census is not None:
        out["census"] = census.to_dict()
        if g.n == 2:
            out["topology"] = topology_n2(rec.b2, 0, census.a2, census.a3, census.a4).to_dict()
    if g.n == 2 and g.order == 1:
        # the smooth K_2(A) itself
        out["census"] = {"a2": 0, "a3": 0, "a4": 0, "s2": 0, "smooth": True}
    if g.order > 1:
        w = smoothness_of(g)
        out["smooth"] = w.smooth
        out["smooth_reason"] = w.reason
    if rec.betti.epsilon:
        out["note"] = "b2 includes the -1 correction for a BD12 splitting the projection onto G0"
    return out


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, str]]:
    out: list[tuple[str, str]] = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flatten(v, key + "."))
        elif isinstance(v, list):
            out.append((key, json.dumps(v, ensure_ascii=False)))
        else:
            out.append((key, str(v)))
    return out


def _emit_record(rec: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec, indent=2, ensure_ascii=False) + "\n"
    pairs = _flatten(rec)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([k for k, _ in pairs])
        w.writerow([v for _, v in pairs])
        return buf.getvalue()
    lines = ["| field | value |", "|---|---|"] + [f"| {k} | {v} |" for k, v in pairs]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_models(args) -> int:
    for name in MODEL_NAMES:
        m = build_model(name)
        print(f"{m.name}\t{m.display}\t{','.join(m.g0_names())}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = _load_group(args)
    sys.stdout.write(_emit_record(full_record(g), args.format))
    return EXIT_OK


def cmd_singularities(args) -> int:
    g = _load_group(args)
    if g.n != 2:
        rec = census_of(g)
        sys.stdout.write(json.dumps({"surfaces": [], "points": [], "census": rec.to_dict()}, indent=2) + "\n")
        return EXIT_OK
    try:
        conf = configuration_report(g)
    except UnmatchedLocalModel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    sys.stdout.write(json.dumps(conf.to_json(), indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.g0 not in G0_GENERATORS:
        raise UsageError(f"unknown linear group {args.g0!r}")
    try:
        amb = ambient_group(args.model, args.g0, args.n)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if amb.order > LARGE_AMBIENT and not args.large:
        print(f"ambient group has order {amb.order}; pass --large to enumerate it", file=sys.stderr)
        return EXIT_CAP
    pred = surjects_onto_g0(args.g0) if args.filter == "surjective" else None
    subs = enumerate_subgroups(amb, pred, invariant_key)
    rows = []
    for s in subs:
        r = invariant_record(s)
        rows.append(
            {
                "order": s.order,
                "id": r.fingerprint.catalogue_id or "",
                "G": r.fingerprint.name,
                "G0": r.g0,
                "rank": r.rank,
                "N2": r.betti.N2,
                "N3": r.betti.N3,
                "b2": r.b2,
                "pi1": r.pi1.name,
            }
        )
    rows.sort(key=lambda x: (x["order"], x["G"], x["N2"], x["N3"], x["b2"], x["pi1"]))
    if args.format == "json":
        sys.stdout.write(json.dumps(rows, indent=2, ensure_ascii=False) + "\n")
    else:
        cols = list(rows[0]) if rows else []
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([r[c] for c in cols])
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_table(args) -> int:
    if args.name not in TABLE_NAMES:
        raise UsageError(f"unknown table {args.name!r}; choose from {', '.join(TABLE_NAMES)}")
    sys.stdout.write(emit(args.name, computed_rows(args.name, args.jobs), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = TABLE_NAMES if args.name == "all" else (args.name,)
    if args.name != "all" and args.name not in TABLE_NAMES:
        raise UsageError(f"unknown table {args.name!r}")
    total = 0
    for name in names:
        rep = verify(name, args.jobs)
        total += len(rep.mismatches)
        print(f"{name}: {rep.rows} rows, {rep.cells} cells, {len(rep.mismatches)} mismatches ({rep.caption})")
        for m in rep.mismatches:
            print(f"  {m}")
    print(f"{total} mismatches")
    return EXIT_OK if total == 0 else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="terminvar", description="Invariants of terminalized symplectic quotients.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("models", help="surface models")
    m.add_argument("action", choices=["list"])
    m.set_defaults(func=cmd_models)

    def source(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--spec", help="JSON group specification")
        grp.add_argument("--catalog", help="catalogue row, e.g. k2/162,54 or k2/3,1#2 or k3/8,5")

    i = sub.add_parser("invariants", help="invariant record of one group")
    source(i)
    i.add_argument("--format", choices=["json", "csv", "md"], default="json")
    i.set_defaults(func=cmd_invariants)

    s = sub.add_parser("singularities", help="singular configuration and census")
    source(s)
    s.set_defaults(func=cmd_singularities)

    e = sub.add_parser("enumerate", help="subgroups of A[n+1] x| G0 up to conjugacy and invariants")
    e.add_argument("--model", required=True, choices=MODEL_NAMES)
    e.add_argument("--g0", required=True)
    e.add_argument("--n", type=int, choices=[2, 3], required=True)
    e.add_argument("--filter", choices=["surjective", "none"], default="surjective")
    e.add_argument("--format", choices=["json", "csv"], default="csv")
    e.add_argument("--large", action="store_true", help=f"allow ambient groups of order > {LARGE_AMBIENT}")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("table", help="compute a full table")
    t.add_argument("name")
    t.add_argument("--format", choices=["json", "csv", "md"], default="md")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="compare computed tables with expected data")
    v.add_argument("name", nargs="?", default="all")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
