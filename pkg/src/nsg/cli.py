"""Command-line front end.

Exit codes: 0 success, 1 falsification found, 2 parse/spec error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from collections import Counter

from .core import NumericalSemigroupError, build, parse_spec
from .invariants import partition_profile, report
from .sweep import BUILTINS, load_config, run_sweep, write_csv, write_jsonl
from .table1 import COLUMNS as TABLE_COLUMNS, compare
from .theorems import CHECKERS, FuzzParams, check_all, random_semigroup

log = logging.getLogger("nsg")

EXIT_OK, EXIT_FALSIFIED, EXIT_SPEC, EXIT_IO = 0, 1, 2, 3


def _json(obj, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")


def _text_report(S, rep, out) -> None:
    width = max(len(k) for k in rep.to_dict())
    for key, value in rep.to_dict().items():
        if key == "min_generators":
            value = ",".join(str(g) for g in value)
        out.write(f"{key:<{width}}  {value}\n")
    if S.is_trivial:
        return
    prof = partition_profile(S)
    out.write("\nSammartano blocks I_a = [am, (a+1)m-1], elements below c:\n")
    for a, (lo, hi) in enumerate(prof.sammartano_blocks()):
        out.write(f"  I_{a:<3} [{lo}, {hi}]  n = {prof.n_alpha[a]}\n")
    out.write("\nEliahou blocks J_a = [am-nu, (a+1)m-nu), elements:\n")
    mem_upto = S.elements_upto(S.conductor + S.multiplicity)
    for a, (lo, hi) in enumerate(prof.eliahou_blocks()):
        count = int(((mem_upto >= lo) & (mem_upto < hi)).sum())
        out.write(f"  J_{a:<3} [{lo}, {hi})  |J_a & S| = {count}\n")
    nonzero = [(j + 1, n) for j, n in enumerate(prof.eta) if n]
    out.write("\neta_j (nonzero): " + ", ".join(f"eta_{j}={n}" for j, n in nonzero) + "\n")


def cmd_info(args, out) -> int:
    S = build(parse_spec(args.spec))
    rep = report(S)
    if args.format == "json":
        _json(rep.to_dict(), out)
    elif args.format == "csv":
        write_csv([rep], out)
    else:
        _text_report(S, rep, out)
    return EXIT_OK


def _emit_verdicts(verdicts, fmt, out) -> None:
    if fmt == "json":
        _json([v.to_dict() for v in verdicts], out)
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["theorem", "hypotheses_met", "conclusion_holds", "witness"])
        for v in verdicts:
            writer.writerow([v.theorem.value, v.hypotheses_met, v.conclusion_holds,
                             json.dumps(v.witness, sort_keys=True)])
    else:
        for v in verdicts:
            status = "FALSIFIED" if v.falsified else (
                "holds" if v.hypotheses_met else "hypotheses not met")
            wit = ", ".join(f"{k}={val}" for k, val in v.witness.items())
            out.write(f"{v.theorem.value:<6} {status:<19} {wit}\n")


def cmd_check(args, out) -> int:
    S = build(parse_spec(args.spec))
    verdicts = check_all(S)
    _emit_verdicts(verdicts, args.format, out)
    return EXIT_FALSIFIED if any(v.falsified for v in verdicts) else EXIT_OK


def cmd_verify(args, out) -> int:
    params = FuzzParams(
        seed=args.seed,
        max_multiplicity=args.max_multiplicity,
        max_generators=args.max_generators,
        threshold_probability=args.threshold_probability,
        count=args.count,
    )
    met = Counter()
    falsifications = []
    n = 0
    for S in random_semigroup(params):
        n += 1
        for v in check_all(S):
            met[v.theorem] += v.hypotheses_met
            if v.falsified:
                falsifications.append({"semigroup": str(S.spec), **v.to_dict()})
    summary = {
        "seed": args.seed,
        "count": n,
        "hypotheses_met": {tid.value: met[tid] for tid in CHECKERS},
        "falsifications": falsifications,
    }
    if args.format == "json":
        _json(summary, out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["theorem", "hypotheses_met", "falsifications"])
        for tid in CHECKERS:
            bad = sum(1 for f in falsifications if f["theorem"] == tid.value)
            writer.writerow([tid.value, met[tid], bad])
    else:
        out.write(f"{n} semigroups checked (seed {args.seed})\n")
        for tid in CHECKERS:
            out.write(f"  {tid.value:<6} hypotheses met {met[tid]:>7}\n")
        out.write(f"falsifications: {len(falsifications)}\n")
        for f in falsifications:
            out.write(f"  {f['semigroup']}: {f['theorem']} {f['witness']}\n")
    return EXIT_FALSIFIED if falsifications else EXIT_OK


def cmd_sweep(args, out) -> int:
    spec = BUILTINS[args.builtin]() if args.builtin else load_config(args.config)
    if args.no_dedupe and spec.dedupe:
        spec = type(spec).from_dict({**spec.to_dict(), "dedupe": False})
    log.info("grid size %d", spec.grid_size)
    result = run_sweep(spec, workers=args.workers)
    log.info("raw hits %d, distinct semigroups %d, rows %d",
             result.raw_hits, result.distinct, len(result.rows))

    sink = open(args.out, "w", encoding="utf-8", newline="") if args.out else out
    try:
        if args.format == "json":
            write_jsonl(result.rows, sink)
        elif args.format == "csv":
            write_csv(result.rows, sink)
        else:
            sink.write(f"grid {result.grid_size}, raw hits {result.raw_hits}, "
                       f"distinct {result.distinct}\n")
            for row in result.rows:
                r = row.report
                sink.write(f"<{','.join(map(str, row.generators))}>_{row.threshold}  "
                           f"c={r.c} e={r.e} e_s={r.e_s} E={r.eliahou} C={r.concentration} "
                           f"mu={r.mu} W(e)={r.wilf_e} W(mu)={r.wilf_mu}\n")
    finally:
        if sink is not out:
            sink.close()
    return EXIT_OK


def cmd_table1(args, out) -> int:
    rows = compare()
    if args.format == "json":
        _json([row.to_dict() for row in rows], out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        header = ["row", "spec"]
        for col in TABLE_COLUMNS:
            header += [f"{col}_published", f"{col}_computed", f"{col}_match"]
        writer.writerow(header + ["match"])
        for row in rows:
            cells = []
            for col in TABLE_COLUMNS:
                cells += list(row.cells[col])
            writer.writerow([row.index, row.spec] + cells + [row.matches])
    else:
        out.write(f"{'row':<4}{'semigroup':<24}" +
                  "".join(f"{c:>22}" for c in TABLE_COLUMNS) + "\n")
        for row in rows:
            line = f"{row.index:<4}{row.spec:<24}"
            for col in TABLE_COLUMNS:
                p, g, ok = row.cells[col]
                line += f"{f'{p} / {g} ' + ('ok' if ok else 'XX'):>22}"
            out.write(line + "\n")
        out.write("cells are published / computed; XX marks a mismatch\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = dict(choices=("text", "json", "csv"), default="text")
    ap = argparse.ArgumentParser(prog="nsg", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="log run metadata to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="invariant report for one semigroup")
    p.add_argument("spec", help="g1,g2,...[;r]")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check", help="run every theorem checker on one semigroup")
    p.add_argument("spec")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="fuzz the theorem checkers")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-multiplicity", type=int, default=200)
    p.add_argument("--max-generators", type=int, default=8)
    p.add_argument("--threshold-probability", type=float, default=0.5)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="grid search over a semigroup family")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="JSON sweep config")
    src.add_argument("--builtin", choices=sorted(BUILTINS))
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    p.add_argument("--no-dedupe", action="store_true")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default $NSG_THREADS or 1)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table1", help="recompute the negative-Eliahou table")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table1)
    return ap


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(name)s: %(message)s")
    try:
        return args.func(args, out)
    except NumericalSemigroupError as exc:
        print(f"nsg: error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except OSError as exc:
        print(f"nsg: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
