"""Command-line front end.

Exit codes: 0 success, 1 a verification found a violation (the report is
still written), 2 usage or input error.  Results go to stdout (or --out),
logs to stderr.  Big integers are always written as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

from . import conjectures as C
from . import knownvalues as kv
from .alpha import CapacityError, EngineMismatchError
from .engines import available_engines, compute_alpha
from .graphs import (Custom, Cycle, DoubleBroom, DoubleStar, GeneralizedStar, GraphFormatError, ParameterError, Path,
                     Star)
from .hilbert import DomainError, beta_row, beta_table, hdepth

log = logging.getLogger("edgehdepth")

FAMILIES = ("path", "cycle", "star", "generalized_star", "double_broom", "double_star")
VERIFY_DEFAULT_RANGES = {"c1": (2, 500), "c2": (3, 300), "c3": (3, 300), "obsy": (2, 300)}


class UsageError(ValueError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(":")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {', '.join(missing)}")


def family_from_args(args):
    if (args.family is None) == (args.graph is None):
        raise UsageError("give exactly one input source: --family or --graph")
    if args.graph is not None:
        return Custom(args.graph)
    fam = args.family
    if fam in ("path", "cycle", "star"):
        _need(args, "n")
        return {"path": Path, "cycle": Cycle, "star": Star}[fam](args.n)
    if fam == "generalized_star":
        _need(args, "branches")
        return GeneralizedStar(args.branches)
    if fam == "double_broom":
        _need(args, "n1", "n", "n2")
        return DoubleBroom(args.n1, args.n, args.n2)
    if fam == "double_star":
        _need(args, "n1", "n2")
        return DoubleStar(args.n1, args.n2)
    raise UsageError(f"unknown family {fam!r}")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ----------------------------------------------------------------

def cmd_alpha(args) -> tuple[str, int]:
    spec = family_from_args(args)
    alpha, engine = compute_alpha(spec, args.module, args.engine)
    if args.format == "csv":
        return _csv(("n", "module", "j", "alpha_j"), [(alpha.n, args.module, j, v) for j, v in enumerate(alpha)]), 0
    return _json({"n": alpha.n, "module": args.module, "engine": engine, "alpha": alpha.to_json()}), 0


def cmd_beta(args) -> tuple[str, int]:
    spec = family_from_args(args)
    alpha, _ = compute_alpha(spec, args.module, args.engine)
    rows = [beta_row(alpha, args.d)] if args.d is not None else beta_table(alpha)
    if args.format == "csv":
        return _csv(("d", "k", "beta"), [(r.d, k, b) for r in rows for k, b in enumerate(r.values)]), 0
    return _json({"n": alpha.n, "module": args.module,
                  "rows": [{"d": r.d, "beta": r.to_json()} for r in rows]}), 0


def cmd_hdepth(args) -> tuple[str, int]:
    spec = family_from_args(args)
    alpha, _ = compute_alpha(spec, args.module, args.engine)
    res = hdepth(alpha)
    if args.format == "csv":
        rows = [(r.d, r.k, r.beta, "rejected") for r in res.rejections]
        rows += [(res.value, k, b, "feasible") for k, b in enumerate(res.feasible_row.values)]
        return _csv(("d", "k", "beta", "status"), rows), 0
    return _json(res.to_json()), 0


def cmd_bounds(args) -> tuple[str, int]:
    spec = family_from_args(args)
    if isinstance(spec, Path):
        reports = kv.path_reports(spec.n)
    elif isinstance(spec, Cycle):
        reports = kv.cycle_reports(spec.n)
        if spec.n >= 6:
            reports.append(kv.relative_cycle_report(spec.n))
    elif isinstance(spec, Star):
        reports = [kv.star_report(spec.n)]
    elif isinstance(spec, GeneralizedStar):
        reports = kv.gstar_reports(spec.branches)
    elif isinstance(spec, DoubleBroom):
        reports = kv.dbroom_reports(spec.n1, spec.n, spec.n2)
    elif isinstance(spec, DoubleStar):
        if spec.n1 < 2 or spec.n2 < 2:
            raise UsageError("known double-star bounds need n1, n2 >= 2")
        reports = kv.dbroom_reports(spec.n1, 2, spec.n2)
    else:
        raise UsageError("no known bounds for custom graphs")
    if args.format == "csv":
        return _csv(("module", "lower", "upper", "exact", "crossed", "source"),
                    [(r.module, r.lower, "" if r.upper is None else r.upper,
                      "" if r.exact is None else r.exact, int(r.crossed), r.source) for r in reports]), 0
    return _json([r.to_json() for r in reports]), 0


def _summary_csv(rep: C.VerificationReport) -> str:
    rows = []
    for claim, ok in sorted(rep.claims.items()):
        n_bad = sum(1 for c in rep.counterexamples if c.claim == claim)
        rows.append((claim, "1" if ok else "0", n_bad))
    return _csv(("claim", "passed", "counterexamples"), rows)


def cmd_verify(args) -> tuple[str, int]:
    which = args.conjecture
    if which == "consistency":
        rep = C.verify_theorem_consistency(size_cap=args.size_cap, workers=args.workers)
    else:
        lo, hi = args.range or VERIFY_DEFAULT_RANGES[which]
        if which == "c1":
            rep = C.verify_conj1(hi, n_min=max(lo, 2), workers=args.workers)
        elif which == "c2":
            rep = C.verify_conj2(hi, n_min=max(lo, 3), workers=args.workers)
        elif which == "c3":
            rep = C.verify_conj3(hi, workers=args.workers)
        else:
            rep = C.verify_obsy(hi, workers=args.workers)
            rep.records = [r for r in rep.records if r.n >= lo]
    code = 0 if rep.passed else 1
    if args.format == "csv":
        out = C.records_to_csv(rep.records) if rep.records else ""
        return out + "\n" + _summary_csv(rep), code
    return _json(rep.to_json()), code


def cmd_scan(args) -> tuple[str, int]:
    lo, hi = args.range
    if args.out:
        C.scan_to_csv(args.out, lo, hi, workers=args.workers)
        return "", 0
    records = C.scan(lo, hi, workers=args.workers)
    if args.format == "json":
        return _json([dict(zip(C.SCAN_COLUMNS, r.csv_row())) for r in records]), 0
    return C.records_to_csv(records), 0


def cmd_oracle_check(args) -> tuple[str, int]:
    spec = family_from_args(args)
    kinds = [args.module] if args.module_given else (["ideal", "quotient", "relative"] if isinstance(spec, Cycle)
                                                      else ["ideal", "quotient"])
    modules = {}
    all_agree = True
    for kind in kinds:
        engines = {}
        for eng in available_engines(spec, kind):
            try:
                alpha, _ = compute_alpha(spec, kind, eng)
            except CapacityError as exc:
                log.info("skipping %s for %s: %s", eng, kind, exc)
                continue
            engines[eng] = alpha.to_json()
        agree = len({tuple(v) for v in engines.values()}) <= 1
        all_agree &= agree
        modules[kind] = {"engines": engines, "agree": agree}
    return _json({"spec": repr(spec), "agree": all_agree, "modules": modules}), 0 if all_agree else 1


# -- parser -----------------------------------------------------------------------

def _add_input(p, module_default="quotient", choices=("ideal", "quotient", "relative")):
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--graph", metavar="FILE", help="JSON graph file {\"n\": .., \"edges\": [[u, v], ..]}")
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--branches", type=_int_list, help="branch lengths, e.g. 4,4")
    p.add_argument("--module", choices=choices, default=None)
    p.set_defaults(module_default=module_default)
    p.add_argument("--engine", choices=("auto",) + ("closed", "published", "dp", "brute"), default="auto")


def _add_output(p, formats=("json", "csv"), default="json"):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgehdepth", description="Exact Hilbert depth of edge-ideal modules.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", help="squarefree monomial counts by degree")
    _add_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("beta", help="beta rows (one d, or the full table)")
    _add_input(p)
    p.add_argument("--d", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("hdepth", help="Hilbert depth with rejection witnesses")
    _add_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_hdepth)

    p = sub.add_parser("bounds", help="known depth/sdepth/hdepth values and bounds")
    _add_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check a conjecture or the known-value consistency over a range")
    p.add_argument("--conjecture", choices=("c1", "c2", "c3", "obsy", "consistency"), required=True)
    p.add_argument("--range", type=_range, help="A:B inclusive (c3 uses B as N)")
    p.add_argument("--size-cap", type=int, help="consistency: skip instances with more vertices")
    p.add_argument("--workers", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="path/cycle hdepth table, resumable with --out")
    p.add_argument("--range", type=_range, required=True)
    p.add_argument("--workers", type=int)
    _add_output(p, default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("oracle-check", help="compare every applicable alpha engine")
    _add_input(p)
    _add_output(p, formats=("json",))
    p.set_defaults(func=cmd_oracle_check)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    if hasattr(args, "module_default"):
        args.module_given = args.module is not None
        if args.module is None:
            args.module = args.module_default
        if args.module == "relative" and args.family != "cycle":
            print("edgehdepth: error: --module relative needs --family cycle", file=sys.stderr)
            return 2
    try:
        text, code = args.func(args)
    except (UsageError, ParameterError, GraphFormatError, CapacityError, EngineMismatchError, DomainError,
            FileNotFoundError, ValueError) as exc:
        print(f"edgehdepth: error: {exc}", file=sys.stderr)
        return 2
    out_path = getattr(args, "out", None)
    if out_path and args.command != "scan":
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    elif text:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
