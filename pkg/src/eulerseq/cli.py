"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 invalid input, 4 mathematical
precondition (non-ample divisor, violated hypothesis), 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .cylinder import euler_report
from .derivations import make_derivation, solve_degree, verify_derivation
from .divisor import load_divisor, present_section_ring, present_until_complete, validate_ample
from .errors import EulerSeqError, HypothesisViolated, InvalidInput, ParseError
from .extclass import ext_report
from .graded import load_ring
from .kernel import FieldSpec
from .verify import builtin_names, load_builtin, run_suite


def _load_document(ref: str) -> dict:
    """A JSON document from a path, or from ``builtin:NAME``."""
    if ref.startswith("builtin:"):
        name = ref[len("builtin:"):]
        if name not in builtin_names():
            raise InvalidInput(f"unknown built-in document {name!r}; available: {', '.join(builtin_names())}")
        return load_builtin(name)
    path = Path(ref)
    if not path.is_file():
        raise InvalidInput(f"no such file: {ref}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{ref}: {exc.msg} (line {exc.lineno})", exc.pos, ref) from exc


def _degree_range(text: str) -> list:
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B or N, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty degree range {text!r}")
    return list(range(lo, hi + 1))


def _char_list(text: str) -> list:
    try:
        chars = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated characteristics, got {text!r}") from None
    if not chars:
        raise argparse.ArgumentTypeError("empty characteristic list")
    return chars


def _fields(chars, default: FieldSpec):
    if chars is None:
        return [default]
    return [FieldSpec.of_characteristic(c) for c in chars]


def _emit(args, doc, text_lines):
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


# -- commands -----------------------------------------------------------------


def run_derivations(args) -> int:
    base = load_ring(_load_document(args.ring))
    results, lines = [], []
    for field in _fields(args.chars, base.field):
        ring = base.over(field) if field != base.field else base
        entry = {"field": field.to_json(), "degrees": []}
        lines.append(f"ring over {field}: {ring!r}")
        for d in args.degrees:
            space = solve_degree(ring, d)
            row = space.to_json(ring)
            lines.append(f"  Der_{d}: dimension {space.dimension}")
            if not args.quiet:
                for b in space.basis:
                    lines.append(f"    {b.pretty(ring)}")
            if args.candidate:
                cand = make_derivation(ring, d, dict(_split_image(c) for c in args.candidate))
                ok, diag = verify_derivation(ring, cand)
                inside = ok and space.contains(ring, cand)
                row["candidate"] = {"derivation": cand.to_json(ring), "valid": ok, "in_span": inside}
                if diag:
                    row["candidate"]["diagnostic"] = diag
                lines.append(f"    candidate {cand.pretty(ring)}: valid = {ok}, in span = {inside}" + (f" ({diag})" if diag else ""))
            entry["degrees"].append(row)
        results.append(entry)
    _emit(args, {"command": "derivations", "results": results}, lines)
    return 0


def _split_image(text: str):
    name, sep, expr = text.partition("=")
    if not sep or not name.strip():
        raise InvalidInput(f"candidate image must look like NAME=EXPR, got {text!r}")
    return name.strip(), expr.strip()


def run_sectionring(args) -> int:
    doc = _load_document(args.divisor)
    results, lines = [], []
    for field in _fields(args.chars, FieldSpec.from_json(doc.get("field", {"kind": "Q"}))):
        D = load_divisor(doc, field)
        validate_ample(D)
        if args.maxdeg is None:
            model = present_until_complete(D)
        else:
            model = present_section_ring(D, args.maxdeg)
        entry = {"field": field.to_json(), "divisor": str(D), "maxdeg": model.maxdeg,
                 "dims": [p.dimension for p in model.pieces]}
        lines.append(f"D = {D} over {field}, deg D = {D.degree}")
        lines.append(f"  dim A_i for i = 0..{model.maxdeg}: {entry['dims']}")
        if args.present:
            pres = model.to_json()
            entry.update({k: pres[k] for k in ("generators", "weights", "relations", "complete")})
            for g in pres["generators"]:
                lines.append(f"  {g['name']} (degree {g['degree']}) = {g['function']} * T^{g['degree']}")
            for r in pres["relations"]:
                lines.append(f"  relation {r} = 0")
            lines.append(f"  complete: {model.complete}")
        results.append(entry)
    _emit(args, {"command": "sectionring", "results": results}, lines)
    return 0


def run_euler(args) -> int:
    doc = _load_document(args.divisor)
    results, lines = [], []
    for field in _fields(args.chars, FieldSpec.from_json(doc.get("field", {"kind": "Q"}))):
        D = load_divisor(doc, field)
        report = euler_report(D, args.d, maxdeg=args.maxdeg)
        try:
            ext = ext_report(D, args.d)
            report["ext"] = {k: ext[k] for k in ("cocycle", "residue", "splits", "log_trivial", "agrees_with_splitting")}
        except HypothesisViolated as exc:
            report["ext"] = {"defined": False, "reason": str(exc)}
        results.append(report)
        lines.extend(_euler_lines(D, report, args.quiet))
    _emit(args, {"command": "euler", "results": results}, lines)
    return 0 if all(r["consistent"] for r in results) else 1


def _euler_lines(D, r, quiet):
    out = [f"D = {D}, d = {r['d']}, characteristic {r['characteristic']}"]
    if not quiet:
        for c in r["components"]:
            out.append(f"  {{{c['place']}}}: p={c['p']} q={c['q']} s={c['s']} {c['class']}")
    out.append(f"  W = {r['W']}, L = {r['L']}, a = {r['a']}, b = {r['b']}")
    a1, a2 = r["splitting"]
    out.append(f"  splitting O({a1}) + O({a2}), h0 = {r['h0_M']}, derivations = {r['der_dim']}"
               f" (presentation complete: {r['complete']})")
    ext = r["ext"]
    if ext.get("defined", True):
        out.append(f"  extension class residue {ext['residue']}, splits = {ext['splits']}")
    else:
        out.append(f"  extension class undefined: {ext['reason']}")
    out.append(f"  consistent: {r['consistent']}")
    return out


def run_extclass(args) -> int:
    doc = _load_document(args.divisor)
    results, lines = [], []
    for field in _fields(args.chars, FieldSpec.from_json(doc.get("field", {"kind": "Q"}))):
        D = load_divisor(doc, field)
        r = ext_report(D, args.d)
        results.append(r)
        lines.append(f"D = {D}, d = {args.d}, characteristic {r['characteristic']}: cocycle ({r['cocycle']}) dt,"
                     f" residue {r['residue']}, splits = {r['splits']}, log_trivial = {r['log_trivial']}")
    _emit(args, {"command": "extclass", "results": results}, lines)
    return 0


def run_verify(args) -> int:
    verdicts = run_suite()
    if args.json or args.quiet:
        print(json.dumps([v.to_json() for v in verdicts], indent=None if args.quiet else 2))
    else:
        for v in verdicts:
            print(v.line())
        passed = sum(v.ok for v in verdicts)
        print(f"{passed}/{len(verdicts)} items passed")
    return 0 if all(v.ok for v in verdicts) else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerseq", description="Derivations of graded algebras and Euler sequences on P^1.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--quiet", action="store_true", help="terse output")
        return p

    p = common(sub.add_parser("derivations", help="homogeneous derivations of a presented ring"))
    p.add_argument("--ring", required=True, help="ring document (path or builtin:NAME)")
    p.add_argument("--degrees", type=_degree_range, default=[-1, 0], help="degree range A..B")
    p.add_argument("--chars", type=_char_list, help="characteristics to reduce the ring into")
    p.add_argument("--candidate", action="append", metavar="NAME=EXPR",
                   help="image of one generator under a candidate derivation (repeatable)")
    p.set_defaults(func=run_derivations)

    p = common(sub.add_parser("sectionring", help="section ring of a divisor on P^1"))
    p.add_argument("--divisor", required=True, help="divisor document (path or builtin:NAME)")
    p.add_argument("--maxdeg", type=int, help="search depth (default grows until complete)")
    p.add_argument("--present", action="store_true", help="also print generators and relations")
    p.add_argument("--chars", type=_char_list)
    p.set_defaults(func=run_sectionring)

    p = common(sub.add_parser("euler", help="Euler sequence report for a divisor"))
    p.add_argument("--divisor", required=True)
    p.add_argument("-d", type=int, required=True, help="derivation degree")
    p.add_argument("--chars", type=_char_list)
    p.add_argument("--maxdeg", type=int, help="presentation depth for the derivation cross-check")
    p.set_defaults(func=run_euler)

    p = common(sub.add_parser("extclass", help="extension class of the Euler sequence"))
    p.add_argument("--divisor", required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--chars", type=_char_list)
    p.set_defaults(func=run_extclass)

    p = common(sub.add_parser("verify-paper", help="run the built-in reference checks"))
    p.set_defaults(func=run_verify)
    return parser


def _join_ranges(argv: list) -> list:
    """Glue ``--degrees -1..0`` into one token so the leading dash is not read as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--degrees":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--degrees={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_ranges(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except EulerSeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:  # anything else is a bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
