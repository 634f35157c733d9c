"""Command-line interface: ``qnarayana {eval,table,verify,conjecture,golden}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .exactalg import RatFunc, ratfunc_from_json
from .families import FAMILIES, get_family
from .moments import MOMENT_KINDS, TABLES, closed_table, moment
from .render import FORMATS, render_object, render_table, to_text

GOLDEN_ENV = "QMOMENTS_GOLDEN_DIR"


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("bound must be >= 0")
    return n


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def _split_ids(values) -> list[str]:
    out = []
    for v in values or []:
        out.extend(s for s in v.split(",") if s)
    return out


def cmd_eval(args) -> int:
    if (args.family is None) == (args.moment is None):
        raise SystemExit("eval: give exactly one of --family or --moment")
    indices = range(args.n + 1) if args.upto else [args.n]
    if args.family is not None:
        try:
            fam = get_family(args.family)
        except KeyError as e:
            raise SystemExit(f"eval: {e.args[0]}")
        values = {n: fam(n) for n in indices}
        label = args.family
    else:
        if args.moment not in MOMENT_KINDS:
            raise SystemExit(f"eval: unknown moment {args.moment!r}; valid names: {', '.join(MOMENT_KINDS)}")
        values = {n: moment(args.moment, n) for n in indices}
        label = args.moment
    _emit(render_object(label, values, args.format), args.output)
    return 0


def cmd_table(args) -> int:
    if args.name not in TABLES:
        raise SystemExit(f"table: unknown table {args.name!r}; valid names: {', '.join(TABLES)}")
    _emit(render_table(closed_table(args.name, args.N), args.format), args.output)
    return 0


def _report_entry(rep, timing: bool) -> dict:
    d = rep.to_json()
    if timing:
        d["seconds"] = round(rep.seconds, 4)
    return d


def cmd_verify(args) -> int:
    from .identities import IDENTITIES, MUTANTS, run_suite

    ids = _split_ids(args.only) or list(IDENTITIES)
    if args.mutate:
        ids += [m for m in MUTANTS if m not in ids]
    unknown = [i for i in ids if i not in IDENTITIES and i not in MUTANTS]
    if unknown:
        raise SystemExit(f"verify: unknown identity {unknown[0]!r}; valid ids: {', '.join(IDENTITIES)}")
    reports = run_suite(ids, args.N, jobs=args.jobs)
    passed = all(r.passed for r in reports)
    data = {
        "command": "verify",
        "N": args.N,
        "passed": passed,
        "results": [_report_entry(r, args.timing) for r in reports],
    }
    _emit(json.dumps(data, indent=2), args.output)
    for r in reports:
        print(r, file=sys.stderr)
    return 0 if passed else 1


def cmd_conjecture(args) -> int:
    from .conjectures import CONJECTURE_IDS, TABLE_NOTE, run_grid

    ids = _split_ids(args.id) or list(CONJECTURE_IDS)
    for cid in ids:
        if cid not in CONJECTURE_IDS:
            raise SystemExit(f"conjecture: unknown id {cid!r}; valid ids: {', '.join(CONJECTURE_IDS)}")
    try:
        reports = run_grid(args.n_max, args.m_max, ids, jobs=args.jobs)
    except Exception as e:  # evaluation errors are the only non-zero exit
        print(f"conjecture: evaluation error: {e}", file=sys.stderr)
        return 2
    data = {
        "command": "conjecture",
        "n_max": args.n_max,
        "m_max": args.m_max,
        "interpretation": TABLE_NOTE,
        "all_pass": all(r.passed for r in reports),
        "cells": [_report_entry(r, args.timing) for r in reports],
    }
    _emit(json.dumps(data, indent=2), args.output)
    return 0


# -- golden files ------------------------------------------------------------


def _golden_objects() -> dict[str, str]:
    from .moments import moment_sequence
    from .orthopoly import orthogonal_polys

    orth = orthogonal_polys(moment_sequence("qfib"), 5)
    out = {
        "family_qfib.json": render_object("qfib", {n: FAMILIES["qfib"](n) for n in range(6)}, "json"),
        "family_R_tq.json": render_object("R_tq", {n: FAMILIES["R_tq"](n) for n in range(4)}, "json"),
        "moment_q_narayana.json": render_object("q_narayana", {n: moment("q_narayana", n) for n in range(5)}, "json"),
        "orthogonal_q_catalan.json": render_object("orthogonal", dict(enumerate(orth)), "json"),
        "table_a_qfib.json": render_table(closed_table("a_qfib", 5), "json"),
        "table_a_orth.json": render_table(closed_table("a_orth", 5), "json"),
        "table_A.json": render_table(closed_table("A", 3), "json"),
    }
    return out


def _reemit(name: str, text: str) -> str:
    """Parse a golden file and emit it again; a fixed point for canonical files."""
    data = json.loads(text)
    if "rows" in data:
        from .moments import TriangularTable

        table = TriangularTable(data["table"], data["N"])
        for n, row in enumerate(data["rows"]):
            for k, e in enumerate(row):
                table.entries[(n, k)] = ratfunc_from_json(e)
        return render_table(table, "json")
    values = {v["n"]: ratfunc_from_json(v["value"]) for v in data["values"]}
    return render_object(data["object"], values, "json")


def golden_dir(explicit: str | None = None) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(GOLDEN_ENV, "golden"))


def cmd_golden(args) -> int:
    root = golden_dir(args.dir)
    objects = _golden_objects()
    if args.action == "write":
        root.mkdir(parents=True, exist_ok=True)
        for name, text in objects.items():
            (root / name).write_text(text + "\n")
        print(f"wrote {len(objects)} golden files to {root}")
        return 0
    bad = 0
    for name, text in objects.items():
        path = root / name
        if not path.exists():
            print(f"MISSING {path}")
            bad += 1
            continue
        stored = path.read_text().rstrip("\n")
        if stored != text:
            print(f"DIFFERS {path}")
            bad += 1
        elif _reemit(name, stored) != stored:
            print(f"NOT A FIXED POINT {path}")
            bad += 1
        else:
            print(f"OK {path}")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qnarayana", description="Exact q-Narayana polynomial toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a family member or a moment")
    e.add_argument("--family", help=f"one of: {', '.join(FAMILIES)}")
    e.add_argument("--moment", help=f"one of: {', '.join(MOMENT_KINDS)}")
    e.add_argument("--n", type=_nonneg, required=True)
    e.add_argument("--upto", action="store_true", help="emit indices 0..n")
    e.add_argument("--format", choices=FORMATS, default="text")
    e.add_argument("--output")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", help="emit a triangular table")
    t.add_argument("--name", required=True, help=f"one of: {', '.join(TABLES)}")
    t.add_argument("--N", type=_nonneg, default=5)
    t.add_argument("--format", choices=FORMATS, default="text")
    t.add_argument("--output")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the proven-identity suite")
    v.add_argument("--only", action="append", help="identity id(s), comma separated")
    v.add_argument("--N", type=_nonneg, default=None, help="override every identity's bound")
    v.add_argument("--mutate", action="store_true", help="also run the mutated negative controls")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include per-identity seconds")
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("conjecture", help="evaluate the conjecture grid")
    c.add_argument("--id", action="append", help="conjecture id(s), comma separated")
    c.add_argument("--n-max", type=_nonneg, default=6)
    c.add_argument("--m-max", type=int, default=2)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--timing", action="store_true", help="include per-cell seconds")
    c.add_argument("--output")
    c.set_defaults(func=cmd_conjecture)

    g = sub.add_parser("golden", help=f"write or check golden files (dir from --dir or ${GOLDEN_ENV})")
    g.add_argument("action", choices=("write", "check"))
    g.add_argument("--dir")
    g.set_defaults(func=cmd_golden)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
