"""Command-line surface: list/show table rows, run verifications, sweep the
database, export it, and check a user-supplied generator triple.

Exit codes: 0 when nothing failed, 1 on any FAIL, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import FactorLabError, FieldMismatch, NotSubgroup
from .gf import FieldSpec
from .linalg import GroupElem, SpaceFrame
from .perm import bsgs, enumerate_and_sift, nonzero_vectors
from .tables import admissible_bindings, load_db
from .verify import (
    DEFAULT_CAPS,
    sweep,
    summary_line,
    tier_b_cases,
    verify_tier_a,
    verify_tier_b,
)


def _add_common(p):
    p.add_argument("--table", type=int, help="restrict to one table")
    p.add_argument("--row", type=int, help="restrict to one row")
    p.add_argument("--sub", help="restrict to one sub-row (a, b, ...)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--db", help="path of the tables DB (default: bundled)")


def _add_caps(p):
    p.add_argument("--max-order", default="1e40",
                   help="TIER-A cap on |G0| (default 1e40)")
    p.add_argument("--max-group", default="1e9",
                   help="BSGS order cap for TIER-B (default 1e9)")
    p.add_argument("--max-domain", type=int, default=DEFAULT_CAPS["max_domain"])
    p.add_argument("--max-enum", type=int, default=DEFAULT_CAPS["max_enum"])


def _caps_from(args):
    return {
        "max_order": int(float(args.max_order)),
        "max_group": int(float(args.max_group)),
        "max_domain": args.max_domain,
        "max_enum": args.max_enum,
    }


def build_parser():
    ap = argparse.ArgumentParser(
        prog="factorlab",
        description="verify factorizations G = HK of finite classical groups",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list the table rows in the database")
    _add_common(p)

    p = sub.add_parser("show", help="print one row: shapes, constraints, reference")
    _add_common(p)

    p = sub.add_parser("verify", help="verify one row at given bindings")
    _add_common(p)
    _add_caps(p)
    p.add_argument("--bind", action="append", default=[], metavar="SYM=VAL")
    p.add_argument("--tier", choices=["a", "b"], default="a")

    p = sub.add_parser("sweep", help="verify every admissible binding of the rows")
    _add_common(p)
    _add_caps(p)
    p.add_argument("--tier", choices=["a", "b", "both"], default="a")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("export-db", help="dump the bundled database")
    _add_common(p)

    p = sub.add_parser("check-triple", help="check G = HK for generator files")
    p.add_argument("genfileG")
    p.add_argument("genfileH")
    p.add_argument("genfileK")
    _add_common(p)
    _add_caps(p)
    return ap


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _reports_payload(reports, summary):
    return json.dumps(
        {"reports": [r.to_json() for r in reports], "summary": summary},
        indent=1, sort_keys=True,
    )


def _select(records, args):
    out = [
        r for r in records
        if (args.table is None or r.table == args.table)
        and (args.row is None or r.row == args.row)
        and (getattr(args, "sub", None) is None or r.sub == args.sub)
    ]
    return out


def cmd_list(args):
    records = _select(load_db(args.db), args)
    lines = []
    for r in records:
        lines.append(f"{r.id:10s} {r.shapes['G']:28s} = {r.shapes['H']} . {r.shapes['K']}")
    _emit(args, "\n".join(lines) if lines else "(no rows match)")
    return 0


def cmd_show(args):
    records = _select(load_db(args.db), args)
    if not records:
        print("no rows match", file=sys.stderr)
        return 2
    blocks = []
    for r in records:
        lines = [
            f"record   {r.id}  ({r.family})",
            f"  G0     {r.shapes['G']}",
            f"  H0     {r.shapes['H']}",
            f"  K0     {r.shapes['K']}",
            f"  H0^K0  {r.shapes['int']}",
        ]
        if r.params:
            spec = ", ".join(
                p["n"] + ("" if "fixed" not in p else f"={p['fixed']}")
                + (" (prime power)" if p.get("pp") else "")
                + (" even" if p.get("even") else "")
                + (" odd" if p.get("odd") else "")
                + (f" >= {p['min']}" if "min" in p else "")
                + (f" = {p['expr']}" if "expr" in p else "")
                for p in r.params
            )
            lines.append(f"  params {spec}")
        if r.where:
            lines.append(f"  where  {' and '.join(f'({w})' for w in r.where)}")
        for name, kind in r.derived.items():
            from .tables import DERIVED_DOC

            lines.append(f"  {name}      {DERIVED_DOC.get(kind, kind)}")
        if r.ref:
            lines.append(f"  ref    {r.ref}")
        if r.remarks:
            lines.append(f"  note   {r.remarks}")
        if r.tier_b:
            lines.append(f"  tier-b bindings {r.tier_b['bindings']} route {r.tier_b['route']}")
        blocks.append("\n".join(lines))
    _emit(args, "\n\n".join(blocks))
    return 0


def _parse_bindings(pairs):
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise FactorLabError(f"--bind expects SYM=VAL, got {pair!r}")
        k, v = pair.split("=", 1)
        out[k.strip()] = int(v)
    return out


def cmd_verify(args):
    records = _select(load_db(args.db), args)
    if not records:
        print("no rows match", file=sys.stderr)
        return 2
    try:
        bound = _parse_bindings(args.bind)
    except (FactorLabError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return 2
    caps = _caps_from(args)
    reports = []
    for rec in records:
        if args.tier == "b":
            cases = [c for c in tier_b_cases([rec])
                     if all(c.bindings.get(k) == v for k, v in bound.items())]
            for case in cases:
                reports.append(verify_tier_b(case, seed=args.seed, caps=caps))
        else:
            cases = [c for c in admissible_bindings(rec, caps["max_order"])
                     if all(c.bindings.get(k) == v for k, v in bound.items())]
            for case in cases:
                reports.append(verify_tier_a(case))
    if not reports:
        print("no admissible case matches the bindings", file=sys.stderr)
        return 2
    summary = {
        "tables": len({r.case_id.split(".")[0] for r in reports}),
        "cases": len(reports),
        "pass": sum(1 for r in reports if r.status == "PASS"),
        "fail": sum(1 for r in reports if r.status == "FAIL"),
        "skipped": sum(1 for r in reports if r.status.startswith("SKIPPED")),
    }
    _render(args, reports, summary)
    return 1 if summary["fail"] else 0


def _render(args, reports, summary):
    if args.format == "json":
        _emit(args, _reports_payload(reports, summary))
    else:
        lines = []
        for r in reports:
            fields = " ".join(f"{k}={v}" for k, v in sorted(r.computed.items()))
            extra = f" [{r.detail}]" if r.detail else ""
            lines.append(f"{r.status:18s} {r.case_id:42s} {fields}{extra} ({r.elapsed_ms} ms)")
        lines.append(summary_line(summary))
        _emit(args, "\n".join(lines))


def cmd_sweep(args):
    records = load_db(args.db)
    caps = _caps_from(args)
    reports, summary = sweep(
        records, tier=args.tier, caps=caps, seed=args.seed,
        table=args.table, row=args.row, jobs=args.jobs,
    )
    _render(args, reports, summary)
    return 1 if summary["fail"] else 0


def cmd_export_db(args):
    from .tables import export_db

    _emit(args, export_db(args.db))
    return 0


def _load_genfile(path):
    with open(path) as fh:
        doc = json.load(fh)
    field = FieldSpec.deserialize(doc["field"])
    gens = [GroupElem.deserialize(field, g) for g in doc["gens"]]
    return field, doc["n"], gens


def cmd_check_triple(args):
    caps = _caps_from(args)
    fG, nG, gG = _load_genfile(args.genfileG)
    fH, nH, gH = _load_genfile(args.genfileH)
    fK, nK, gK = _load_genfile(args.genfileK)
    if not (fG == fH == fK) or not (nG == nH == nK):
        raise FieldMismatch("the three generator files must share a field and dimension")
    frame = SpaceFrame(fG, nG, None, tuple(f"v{i+1}" for i in range(nG)))
    dom = nonzero_vectors(frame, caps["max_domain"])
    chainG = bsgs(gG, dom, seed=args.seed)
    for g in gH + gK:
        if not chainG.contains(dom.perm_of(g)):
            raise NotSubgroup("H and K generators must sift into G")
    chainH = bsgs(gH, dom, seed=args.seed)
    chainK = bsgs(gK, dom, seed=args.seed)
    n_int = enumerate_and_sift(chainH, chainK, caps["max_enum"])
    holds = chainH.order() * chainK.order() == chainG.order() * n_int
    payload = {
        "orderG": str(chainG.order()),
        "orderH": str(chainH.order()),
        "orderK": str(chainK.order()),
        "orderInt": str(n_int),
        "factorization": holds,
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join(f"{k} = {v}" for k, v in payload.items()))
    return 0 if holds else 1


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "list": cmd_list,
        "show": cmd_show,
        "verify": cmd_verify,
        "sweep": cmd_sweep,
        "export-db": cmd_export_db,
        "check-triple": cmd_check_triple,
    }
    try:
        return handlers[args.command](args)
    except FactorLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
