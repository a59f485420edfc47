"""Command-line front end: one-shot queries on a signature, plus batch runs.

Every command builds one report dict.  ``--format json`` prints it as is;
``--format text`` renders the same dict line by line, so both formats carry
the same data.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .abelian import FinAbGroup
from .checks import run_checks
from .cohomology import (DEFAULT_QMAX, MODES, PROOF_DERIVED, cohomology_table,
                         homology_table, modes_expected_to_differ, unit_w_dropped)
from .errors import NecError
from .l2 import format_rational, l2_profile
from .presentation import abelianize, build_presentation
from .ring import degree_component, ring_structure
from .signature import (derived_counts, format_signature, hyperbolic_measure,
                        parse_signature, validate)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _degree(text):
    q = int(text)
    if q < 0:
        raise argparse.ArgumentTypeError(f"degree must be >= 0, got {q}")
    return q


def _group(g):
    return g.to_json()


def _is_group(obj):
    return isinstance(obj, dict) and set(obj) == {"rank", "torsion"}


def _report(text, command):
    return {"signature": text, "command": command, "results": {},
            "warnings": [], "checks": []}


def _load(text):
    sig = parse_signature(text)
    validate(sig)
    return sig


def _validate(sig, args, rep):
    c = derived_counts(sig)
    rep["results"] = {
        "valid": True,
        "canonical": format_signature(sig),
        "case": sig.case,
        "fuchsian": sig.is_fuchsian,
        "hyperbolic_measure": format_rational(hyperbolic_measure(sig)),
        "counts": {"r": c.num_periods, "s": c.num_cusps, "k": c.num_cycles,
                   "d": c.num_empty_cycles, "C_E": c.even_corners,
                   "C_T": c.odd_corners, "C_O": c.odd_only_cycles},
    }


def _table(sig, args, rep):
    if args.homology:
        table, label = homology_table(sig, args.qmax), "H_"
    else:
        table, label = cohomology_table(sig, args.qmax, args.mode), "H^"
    rep["results"] = {
        "kind": table.kind, "mode": table.mode, "qmax": args.qmax,
        "groups": {f"{label}{q}": _group(g) for q, g in table.items()},
    }
    if not args.homology:
        diff = [q for q in range(args.qmax + 1) if modes_expected_to_differ(sig, q)]
        if diff:
            rep["warnings"].append(f"proof-derived and as-printed cohomology differ at q in {diff}")
        if unit_w_dropped(sig):
            rep["warnings"].append(f"{unit_w_dropped(sig)} unit w_p factor(s) dropped from H^2")


def _abelianization(sig, args, rep):
    p = build_presentation(sig)
    rep["results"] = {"group": _group(abelianize(p)), "presentation": str(p)}


def _ring(sig, args, rep):
    ring = ring_structure(sig)
    rep["results"] = {
        "summands": {f"s{i}": str(s) for i, s in enumerate(ring.summands)},
        "unit": f"s{ring.unit_summand()}",
        "degrees": {f"H^{q}": _group(degree_component(ring, q))
                    for q in range(args.qmax + 1)},
    }


def _cup(sig, args, rep):
    ring = ring_structure(sig)
    a, b = ring.parse_element(args.left), ring.parse_element(args.right)
    prod = ring.cup(a, b)
    deg = ring.degree(prod)
    rep["results"] = {
        "left": ring.format_element(a), "right": ring.format_element(b),
        "product": ring.format_element(prod),
        "degree": "none" if deg is None else deg,
    }


def _l2(sig, args, rep):
    prof = l2_profile(sig)
    rep["results"] = {
        "chi_q": format_rational(prof.chi_q),
        "betti": {f"b{p}": format_rational(v) for p, v in prof.betti.items()},
    }


def _check(sig, args, rep):
    checks, warnings = run_checks(sig, args.qmax)
    rep["checks"] = [c.to_json() for c in checks]
    rep["warnings"].extend(warnings)
    rep["results"] = {"passed": all(c.passed for c in checks), "qmax": args.qmax}


COMMANDS = {"validate": _validate, "table": _table, "abelianization": _abelianization,
            "ring": _ring, "cup": _cup, "l2": _l2, "check": _check}


def evaluate(command, text, args):
    """Build the report for one signature; returns (exit status, report)."""
    rep = _report(text, command)
    try:
        sig = _load(text)
        COMMANDS[command](sig, args, rep)
    except NecError as exc:
        rep["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return EXIT_INVALID, rep
    if command == "check" and not rep["results"]["passed"]:
        return EXIT_FAILED, rep
    return EXIT_OK, rep


def _corpus_line(item):
    text, qmax = item
    return evaluate("check", text, argparse.Namespace(qmax=qmax))


def _corpus(args):
    rep = _report(args.file, "corpus")
    try:
        with open(args.file) as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        rep["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return EXIT_USAGE, rep
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    items = [(ln, args.qmax) for ln in lines]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            outcomes = list(pool.map(_corpus_line, items, chunksize=8))
    else:
        outcomes = [_corpus_line(it) for it in items]
    statuses = [s for s, _ in outcomes]
    rep["results"] = {
        "count": len(lines),
        "invalid": statuses.count(EXIT_INVALID),
        "failed": statuses.count(EXIT_FAILED),
        "entries": [r for _, r in outcomes],
    }
    for _, r in outcomes:
        rep["checks"].append({
            "name": r["signature"],
            "pass": "error" not in r and all(c["pass"] for c in r["checks"]),
            "detail": r["error"]["message"] if "error" in r else
            f"{sum(c['pass'] for c in r['checks'])}/{len(r['checks'])} checks pass",
        })
    if EXIT_INVALID in statuses:
        return EXIT_INVALID, rep
    if EXIT_FAILED in statuses:
        return EXIT_FAILED, rep
    return EXIT_OK, rep


def build_parser():
    parser = _Parser(prog="nec-cohomology",
                     description="Cohomology, rings and L2-invariants of NEC groups.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, qmax=False):
        p = sub.add_parser(name, help=help_text, parents=[fmt])
        p.add_argument("signature", help='e.g. "(0,0,+,[2,3,7],{})" or "[1,1;]"')
        if qmax:
            p.add_argument("--qmax", type=_degree, default=DEFAULT_QMAX)
        return p

    add("validate", "parse and validate a signature")
    p = add("table", "cohomology (or homology) table", qmax=True)
    p.add_argument("--homology", action="store_true")
    p.add_argument("--mode", choices=MODES, default=PROOF_DERIVED)
    add("abelianization", "H_1 from the presentation by Smith normal form")
    add("ring", "cohomology ring of a Fuchsian group", qmax=True)
    p = add("cup", "cup product of two homogeneous ring elements")
    p.add_argument("left")
    p.add_argument("right")
    add("l2", "rational Euler characteristic and L2-Betti numbers")
    add("check", "run every oracle cross-check", qmax=True)
    p = sub.add_parser("corpus", help="run check on each line of a file", parents=[fmt])
    p.add_argument("file")
    p.add_argument("--qmax", type=_degree, default=DEFAULT_QMAX)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _render_value(value):
    if _is_group(value):
        return str(FinAbGroup.from_json(value))
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _render_mapping(data, indent):
    lines = []
    pad = "  " * indent
    for key, value in data.items():
        if isinstance(value, dict) and not _is_group(value):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_mapping(value, indent + 1))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}:")
            for item in value:
                if isinstance(item, dict) and not _is_group(item):
                    sub = _render_mapping(item, indent + 2)
                    lines.append(f"{pad}  - " + sub[0].strip())
                    lines.extend(sub[1:])
                else:
                    lines.append(f"{pad}  - {_render_value(item)}")
        else:
            lines.append(f"{pad}{key}: {_render_value(value)}")
    return lines


def render_text(rep):
    lines = [f"signature: {rep['signature']}", f"command: {rep['command']}"]
    if "error" in rep:
        lines.append(f"error: {rep['error']['type']}: {rep['error']['message']}")
    if rep["results"]:
        lines.append("results:")
        lines.extend(_render_mapping(rep["results"], 1))
    if rep["checks"]:
        lines.append("checks:")
        for c in rep["checks"]:
            lines.append(f"  [{'pass' if c['pass'] else 'FAIL'}] {c['name']}: {c['detail']}")
    if rep["warnings"]:
        lines.append("warnings:")
        lines.extend(f"  - {w}" for w in rep["warnings"])
    return "\n".join(lines)


def run(argv=None, out=None):
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        rep = _report("", "usage")
        rep["error"] = {"type": "UsageError", "message": str(exc)}
        fmt = "json" if "--format=json" in argv or _follows(argv, "--format", "json") else "text"
        _emit(rep, fmt, out)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.command == "corpus":
        status, rep = _corpus(args)
    else:
        status, rep = evaluate(args.command, args.signature, args)
    _emit(rep, args.format, out)
    return status


def _follows(argv, flag, value):
    return any(a == flag and b == value for a, b in zip(argv, argv[1:]))


def _emit(rep, fmt, out):
    if fmt == "json":
        out.write(json.dumps(rep, indent=2, default=_json_default) + "\n")
    else:
        out.write(render_text(rep) + "\n")


def _json_default(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
