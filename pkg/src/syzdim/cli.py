"""Command-line interface.

Exit codes: 0 success, 1 unreadable or malformed instance, 2 a resource cap
was hit, 3 a check failed (or resolve and oracle disagree), 4 the oracle
comparison is uncertified.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from pathlib import Path

from . import __version__
from .checks import CLAIMS, run_checks
from .config import ResourceLimitExceeded, limits
from .corpus import PROFILES, generate_corpus
from .instance import InstanceError, InstanceFile, load_instance, parse_field
from .oracle import compare_with_resolution, graded_betti_oracle
from .resolution import betti_sequence, graded_betti, resolve

SCHEMA_VERSION = 1

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_FAILS, EXIT_UNCERTIFIED = 0, 1, 2, 3, 4


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _graded_rows(table: dict) -> list[list[int]]:
    return [[i, j, b] for (i, j), b in sorted(table.items())]


def _load(args):
    f = load_instance(args.instance)
    char = parse_field(args.field) if getattr(args, "field", None) else None
    window = getattr(args, "window", None)
    return f, f.to_instance(characteristic=char, window=window)


def _caps(f: InstanceFile):
    o = f.options
    if "pair_cap" in o or "minor_cap" in o:
        return limits(pair_cap=o.get("pair_cap"), minor_cap=o.get("minor_cap"))
    return nullcontext()


def cmd_resolve(args) -> int:
    f, inst = _load(args)
    with _caps(f):
        res = resolve(inst.module, inst.window)
    betti = betti_sequence(res)
    if args.out == "machine":
        _emit({
            "version": SCHEMA_VERSION,
            "label": inst.label,
            "field": inst.ring.field.characteristic,
            "window": inst.window,
            "betti": list(betti),
            "terminated": betti.terminated,
            "graded": _graded_rows(graded_betti(res)),
            "differentials": [
                {"index": k + 1, "shape": list(d.shape), "row_twists": list(d.row_twists),
                 "matrix": [[str(e) for e in row] for row in d.matrix]}
                for k, d in enumerate(res.differentials if inst.window else ())
            ],
        })
        return EXIT_OK
    print(f"instance {inst.label}  over {inst.ring}")
    for k, d in enumerate(res.differentials if inst.window else ()):
        print(f"delta_{k + 1}  {d.nrows} x {d.ncols}")
        if d.ncols and d.nrows:
            print(str(d))
    print("betti  " + str(betti))
    print("terminated" if betti.terminated else f"window {inst.window} (not terminated)")
    return EXIT_OK


def cmd_check(args) -> int:
    f, inst = _load(args)
    claims = None if args.claims == "all" else args.claims.split(",")
    with _caps(f):
        report = run_checks(inst, claims)
    if args.out == "machine":
        _emit(report.to_dict())
    else:
        print(report.text())
    return EXIT_FAILS if report.fails() else EXIT_OK


def cmd_oracle_compare(args) -> int:
    f, inst = _load(args)
    D = args.degree_bound if args.degree_bound is not None else f.options.get("degree_bound")
    H = args.hom_bound if args.hom_bound is not None else f.options.get("hom_bound")
    if D is None or H is None:
        raise InstanceError("degree and homological bounds are required (-D, -H)")
    with _caps(f):
        res = resolve(inst.module, H)
        oracle = graded_betti_oracle(inst.module, D, H)
    cmp = compare_with_resolution(oracle, res)
    if args.out == "machine":
        _emit({"version": SCHEMA_VERSION, "label": inst.label, "degree_bound": D, "hom_bound": H,
               "status": cmp.status, "oracle_totals": list(cmp.oracle_totals),
               "resolve_totals": list(cmp.resolve_totals), "compared": list(cmp.compared_totals),
               "oracle_graded": _graded_rows(oracle.graded), "discrepancies": cmp.discrepancies,
               "reason": oracle.reason})
    else:
        print(f"instance {inst.label}  D={D}  H={H}")
        print(f"{'i':>3} {'resolve':>8} {'oracle':>8}  compared")
        for i in range(H + 1):
            r = cmp.resolve_totals[i] if i < len(cmp.resolve_totals) else "-"
            print(f"{i:>3} {r!s:>8} {cmp.oracle_totals[i]:>8}  {'yes' if i in cmp.compared_totals else 'no'}")
        for line in cmp.discrepancies:
            print("  " + line)
        print(cmp.status + (f" ({oracle.reason})" if oracle.reason else ""))
    return {"equal": EXIT_OK, "uncertified": EXIT_UNCERTIFIED}.get(cmp.status, EXIT_FAILS)


def cmd_corpus(args) -> int:
    insts = generate_corpus(args.seed, args.count, args.profile, window=args.window)
    if args.save:
        out = Path(args.save)
        out.mkdir(parents=True, exist_ok=True)
        for inst in insts:
            (out / f"{inst.label}.inst").write_text(InstanceFile.from_instance(inst).dumps() + "\n")
    status = EXIT_OK
    for inst in insts:
        if not args.check:
            if args.out == "machine":
                _emit(InstanceFile.from_instance(inst).to_dict())
            else:
                print(f"{inst.label}  {inst.ring}  shape {inst.module.shape}")
            continue
        report = run_checks(inst)
        if report.fails():
            status = EXIT_FAILS
        if args.out == "machine":
            _emit(report.to_dict())
        else:
            verdicts = " ".join(f"{k}={v.status}" for k, v in report.verdicts.items())
            print(f"{inst.label}  betti {' '.join(map(str, report.betti))}  {verdicts}")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="syzdim", description="Syzygies, supports and dimensions over graded quotient rings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, window=True):
        sp.add_argument("instance", help="instance file, or the name of a built-in fixture")
        sp.add_argument("--field", help="override the coefficient field: q or pN")
        sp.add_argument("--out", choices=("text", "machine"), default="text")
        if window:
            sp.add_argument("--window", type=int, help="number of differentials to compute")

    sp = sub.add_parser("resolve", help="minimal free resolution and Betti numbers")
    common(sp)
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("check", help="evaluate claims over a resolution window")
    common(sp)
    sp.add_argument("--claims", default="all",
                    help="all, or a comma-separated subset of: " + ", ".join(CLAIMS))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("oracle-compare", help="compare Betti numbers with the linear-algebra oracle")
    common(sp, window=False)
    sp.add_argument("-D", "--degree-bound", type=int)
    sp.add_argument("-H", "--hom-bound", type=int)
    sp.set_defaults(func=cmd_oracle_compare)

    sp = sub.add_parser("corpus", help="generate (and optionally check) random instances")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--profile", choices=PROFILES, default="default")
    sp.add_argument("--window", type=int, default=6)
    sp.add_argument("--check", action="store_true", help="run all claims on each instance")
    sp.add_argument("--save", metavar="DIR", help="write each instance file into DIR")
    sp.add_argument("--out", choices=("text", "machine"), default="text")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "claims", "all") != "all":
        bad = [c for c in args.claims.split(",") if c not in CLAIMS]
        if bad:
            print(f"error: unknown claim(s): {', '.join(bad)}", file=sys.stderr)
            return EXIT_PARSE
    try:
        return args.func(args)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitExceeded as exc:
        where = f" at homological degree {exc.homological_degree}" if exc.homological_degree else ""
        print(f"resource cap {exc.cap} hit{where}: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
