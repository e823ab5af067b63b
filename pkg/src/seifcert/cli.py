"""Command-line front end.

Subcommands: lspace, dinv, tight, d3, alexander, torus, critical,
classify.  Every command accepts --json and emits a single top-level
object with a schema_version field; all numbers are exact "p/q" strings,
never floats.  Exit codes: 0 success, 2 parse error, 3 certificate not
applicable, 4 unsupported input, 5 internal invariant violation.

Batch mode (--batch FILE) runs one command line per file line and
streams the results in input order.  Execution is sequential, so output
is byte-identical across runs; --jobs is accepted for compatibility.
"""

from __future__ import annotations

import argparse
import os
import json
import re
import shlex
import sys
from fractions import Fraction

from . import __version__
from .contact import (
    ContactDiagram,
    LegendrianUnknotComponent,
    classify,
    d3,
    enumerate_candidates,
    tightness_certificate,
)
from .errors import DomainError, InternalCheckError, ParseError
from .exact import IntMatrix, format_rational, parse_rational
from .floer import form_data, manifold_d_table
from .lspace import is_lspace
from .seifert import (
    euler_number,
    format_seifert,
    h1_order,
    parse_seifert,
    plumbing_tree,
    torus_surgery_seifert,
)
from .torusknot import (
    alexander_torus,
    critical_d_multiset,
    d_critical_surgery,
    spin_d,
    torsion_coefficients,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_APPLICABLE = 3
EXIT_UNSUPPORTED = 4
EXIT_INTERNAL = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _encode(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    if isinstance(obj, frozenset):
        return [_encode(x) for x in sorted(obj)]
    return obj


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        print(json.dumps(_encode(report), indent=2, sort_keys=False), file=out)
    else:
        _emit_human(report, out)


def _emit_human(report: dict, out, indent: str = "") -> None:
    for key, value in report.items():
        if key == "schema_version":
            continue
        if isinstance(value, dict):
            print(f"{indent}{key}:", file=out)
            _emit_human(value, out, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:", file=out)
            cols = list(value[0].keys())
            rows = [[_plain(item.get(c)) for c in cols] for item in value]
            widths = [
                max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)
            ]
            head = "  ".join(c.ljust(w) for c, w in zip(cols, widths))
            print(f"{indent}  {head}", file=out)
            for r in rows:
                print(
                    f"{indent}  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)),
                    file=out,
                )
        else:
            print(f"{indent}{key}: {_plain(value)}", file=out)


def _plain(value) -> str:
    value = _encode(value)
    if isinstance(value, list):
        return ",".join(_plain(x) for x in value) if value else "-"
    if value is None:
        return "-"
    return str(value)


def _label_str(label) -> str:
    return "(" + ",".join(str(x) for x in label) + ")"


# -- subcommand implementations --------------------------------------------


def _cmd_lspace(args, out) -> int:
    M = parse_seifert(args.seifert)
    verdict = is_lspace(M)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "lspace",
        "input": args.seifert.strip(),
        "normalized": format_seifert(M),
        "e": euler_number(M),
        "h1": h1_order(M),
        "verdict": verdict.is_lspace,
        "reason": verdict.reason,
        "witnesses": {
            "plus": [verdict.witness_plus.m, verdict.witness_plus.a]
            if verdict.witness_plus
            else None,
            "minus": [verdict.witness_minus.m, verdict.witness_minus.a]
            if verdict.witness_minus
            else None,
        },
    }
    _emit(report, args.json, out)
    return EXIT_OK


def _cmd_dinv(args, out) -> int:
    M = parse_seifert(args.seifert)
    table = manifold_d_table(M)
    fd = form_data(table.table.tree.intersection_matrix())
    rows = [
        {
            "label": _label_str(label),
            "d": table.d(label),
            "conjugate": _label_str(fd.conjugate_label(label)),
            "spin": fd.is_self_conjugate(label),
        }
        for label in sorted(table.labels())
    ]
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "dinv",
        "input": args.seifert.strip(),
        "normalized": format_seifert(M),
        "e": euler_number(M),
        "h1": h1_order(M),
        "tree_weights": list(table.table.tree.weights),
        "tree_bounds_reverse": table.sign == -1,
        "table": rows,
    }
    _emit(report, args.json, out)
    return EXIT_OK


def _certificate_row(report) -> dict:
    return {
        "candidate": _label_str(report.candidate_key),
        "d3": report.d3,
        "verdict": report.verdict,
        "orbit": [_label_str(t) for t in sorted(report.spinc_orbit)],
        "orbit_d": sorted(report.d_values_on_orbit),
        "spin_in_orbit": report.orbit_has_self_conjugate,
        "conjugate": _label_str(report.conjugate_key),
    }


def _cmd_tight(args, out) -> int:
    M = parse_seifert(args.seifert)
    if M.e0 != -1:
        raise DomainError("tightness certificates need e0 = -1 after normalization")
    candidates = enumerate_candidates(M)
    total = len(candidates)
    if args.max_candidates is not None:
        candidates = candidates[: args.max_candidates]
    not_applicable = euler_number(M) <= 0
    if not_applicable:
        rows = []
        verdict_summary = "NotApplicable"
    else:
        table = manifold_d_table(M)
        reports = [tightness_certificate(M, c, table) for c in candidates]
        rows = [
            _certificate_row(r)
            for r in reports
            if args.list_all or args.verbose or r.verdict == "Nonzero"
        ]
        verdict_summary = (
            "Nonzero" if any(r.verdict == "Nonzero" for r in reports) else "Inconclusive"
        )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "tight",
        "input": args.seifert.strip(),
        "normalized": format_seifert(M),
        "e": euler_number(M),
        "h1": h1_order(M),
        "candidates": total,
        "examined": len(candidates),
        "summary": verdict_summary,
        "certificates": rows,
    }
    _emit(report, args.json, out)
    return EXIT_NOT_APPLICABLE if not_applicable else EXIT_OK


def read_diagram(path: str) -> ContactDiagram:
    """Diagram file: one component per line, ``tb rot coeff : linking-row``.

    The linking row includes the diagonal entry, which must equal
    tb + coeff.  Blank lines and lines starting with '#' are skipped.
    """
    comps = []
    rows = []
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise ParseError(f"{path}:{lineno}: expected 'tb rot coeff : row'")
            head, _, tail = line.partition(":")
            try:
                tb, rot, coeff = (int(tok) for tok in head.split())
                row = [int(tok) for tok in tail.split()]
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: bad integer field") from exc
            stabs = -1 - tb
            if stabs < 0 or abs(rot) > stabs or (rot - stabs) % 2:
                raise DomainError(
                    f"{path}:{lineno}: rot {rot} impossible for tb {tb}"
                )
            comps.append(
                LegendrianUnknotComponent(
                    tb, rot, coeff, (stabs + rot) // 2, (stabs - rot) // 2
                )
            )
            rows.append(row)
    if any(len(r) != len(rows) for r in rows):
        raise ParseError(f"{path}: linking matrix is not square")
    return ContactDiagram(tuple(comps), IntMatrix(rows), (), tuple(c.rot for c in comps))


def _cmd_d3(args, out) -> int:
    diagram = read_diagram(args.diagram_file)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "d3",
        "input": args.diagram_file,
        "components": len(diagram.components),
        "q": diagram.q,
        "d3": d3(diagram),
    }
    _emit(report, args.json, out)
    return EXIT_OK


def _cmd_alexander(args, out) -> int:
    data = alexander_torus(args.p, args.q)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "alexander",
        "p": args.p,
        "q": args.q,
        "degree": data.n,
        "coefficients": list(data.a),
        "torsion_coefficients": torsion_coefficients(args.p, args.q),
        "at_one": data.at_one(),
    }
    _emit(report, args.json, out)
    return EXIT_OK


def _cmd_torus(args, out) -> int:
    M = torus_surgery_seifert(args.p, args.q, args.n)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "torus",
        "p": args.p,
        "q": args.q,
        "n": args.n,
        "seifert": format_seifert(M),
        "e": euler_number(M),
        "h1": h1_order(M),
        "lens_space": M.k <= 2,
    }
    if args.n == args.p * args.q - args.p - args.q:
        half = (args.n - 1) // 2
        report["d_table_torsion_route"] = [
            {"k": k, "d": d_critical_surgery(args.p, k, args.q)}
            for k in range(-half, half + 1)
        ]
    _emit(report, args.json, out)
    return EXIT_OK


def _cmd_critical(args, out) -> int:
    p = args.p
    n = p * p - p - 1
    M = torus_surgery_seifert(p, p + 1, n)
    table = manifold_d_table(M)
    plumbing_values = sorted(table.d_values().values())
    torsion_values = sorted(critical_d_multiset(p))
    candidates = enumerate_candidates(M)
    reports = [tightness_certificate(M, c, table) for c in candidates]
    nonzero = [r for r in reports if r.verdict == "Nonzero"]
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "critical",
        "p": p,
        "surgery_coefficient": n,
        "seifert": format_seifert(M),
        "h1": h1_order(M),
        "spin_d": spin_d(p),
        "d_multiset_plumbing": plumbing_values,
        "d_multiset_torsion": torsion_values,
        "multisets_equal": plumbing_values == torsion_values,
        "candidates": len(candidates),
        "nonzero_count": len(nonzero),
        "nonzero": [_certificate_row(r) for r in nonzero],
        "nonzero_with_spin_label": any(r.orbit_has_self_conjugate for r in nonzero),
    }
    _emit(report, args.json, out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    M = parse_seifert(args.seifert)
    result = classify(M, max_candidates=args.max_candidates)
    verdict = result.lspace
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "input": args.seifert.strip(),
        "normalized": format_seifert(M),
        "e": euler_number(M),
        "h1": h1_order(M),
        "is_lspace": verdict.is_lspace,
        "lspace_reason": verdict.reason,
        "zero_twisting_forced": result.zero_twisting_forced,
        "all_contact_structures_planar": result.all_contact_structures_planar,
        "zero_twisting_tight_planar": result.zero_twisting_tight_planar,
        "candidates": len(result.certificates),
        "exists_nonzero": result.exists_nonzero,
        "all_conjugate_pairs": result.all_conjugate_pairs,
        "nonzero_with_spin_label": result.nonzero_with_self_conjugate_orbit,
        "note": result.note,
        "certificates": [
            _certificate_row(r) for r in result.certificates
            if args.list_all or args.verbose or r.verdict == "Nonzero"
        ],
    }
    _emit(report, args.json, out)
    return EXIT_OK


# -- wiring ------------------------------------------------------------------

_SCHEMA = {
    "schema_version": SCHEMA_VERSION,
    "rational_format": "exact 'p/q' or 'n' strings; never floats",
    "seifert_format": "e0;r1,r2,...,rk",
    "diagram_file_format": "per line: tb rot coeff : linking-row (diagonal = tb + coeff)",
    "exit_codes": {
        "0": "success",
        "2": "parse error",
        "3": "certificate not applicable (e <= 0)",
        "4": "unsupported input",
        "5": "internal invariant violation",
    },
    "commands": {
        "lspace": ["input", "normalized", "e", "h1", "verdict", "reason",
                   "witnesses{plus,minus}"],
        "dinv": ["normalized", "e", "h1", "tree_weights", "tree_bounds_reverse",
                 "table[{label,d,conjugate,spin}]"],
        "tight": ["normalized", "e", "h1", "candidates", "examined", "summary",
                  "certificates[{candidate,d3,verdict,orbit,orbit_d,spin_in_orbit,conjugate}]"],
        "d3": ["components", "q", "d3"],
        "alexander": ["p", "q", "degree", "coefficients", "torsion_coefficients", "at_one"],
        "torus": ["p", "q", "n", "seifert", "e", "h1", "lens_space",
                  "d_table_torsion_route[{k,d}]"],
        "critical": ["p", "surgery_coefficient", "seifert", "h1", "spin_d",
                     "d_multiset_plumbing", "d_multiset_torsion", "multisets_equal",
                     "candidates", "nonzero_count", "nonzero", "nonzero_with_spin_label"],
        "classify": ["normalized", "e", "h1", "is_lspace", "lspace_reason",
                     "zero_twisting_forced", "all_contact_structures_planar",
                     "zero_twisting_tight_planar", "candidates", "exists_nonzero",
                     "all_conjugate_pairs", "nonzero_with_spin_label", "note",
                     "certificates"],
    },
}


def build_parser() -> _Parser:
    parser = _Parser(prog="seifcert", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--schema", action="store_true", help="print the JSON schema and exit")
    parser.add_argument("--batch", metavar="FILE", help="run one command line per file line")
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("SEIFCERT_JOBS", "1")),
        help="accepted for compatibility; execution is sequential",
    )
    sub = parser.add_subparsers(dest="command")

    def add(name, fn, *specs):
        p = sub.add_parser(name)
        for spec_args, spec_kw in specs:
            p.add_argument(*spec_args, **spec_kw)
        p.add_argument("--json", action="store_true")
        p.add_argument("-v", "--verbose", action="store_true")
        p.set_defaults(fn=fn)
        return p

    add("lspace", _cmd_lspace, ((["seifert"], {})))
    add("dinv", _cmd_dinv, ((["seifert"], {})))
    add(
        "tight",
        _cmd_tight,
        ((["seifert"], {})),
        ((["--max-candidates"], {"type": int, "default": None})),
        ((["--list-all"], {"action": "store_true"})),
    )
    add("d3", _cmd_d3, ((["diagram_file"], {})))
    add("alexander", _cmd_alexander, ((["p"], {"type": int})), ((["q"], {"type": int})))
    add(
        "torus",
        _cmd_torus,
        ((["p"], {"type": int})),
        ((["q"], {"type": int})),
        ((["n"], {"type": int})),
    )
    add("critical", _cmd_critical, ((["p"], {"type": int})))
    add(
        "classify",
        _cmd_classify,
        ((["seifert"], {})),
        ((["--max-candidates"], {"type": int, "default": None})),
        ((["--list-all"], {"action": "store_true"})),
    )
    return parser


_SEIFERT_LIKE = re.compile(r"-\d+;")


def run(argv, out=None) -> int:
    """Dispatch one command line; returns the exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    # pad Seifert strings with a space so argparse does not read them as options
    argv = [" " + a if _SEIFERT_LIKE.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
        if args.schema:
            print(json.dumps(_SCHEMA, indent=2), file=out)
            return EXIT_OK
        if args.batch:
            code = EXIT_OK
            with open(args.batch, encoding="ascii") as fh:
                for raw in fh:
                    line = raw.strip()
                    if not line or line.startswith("#"):
                        continue
                    rc = run(shlex.split(line), out=out)
                    if code == EXIT_OK:
                        code = rc
            return code
        if not args.command:
            parser.print_help(out)
            return EXIT_PARSE
        return args.fn(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InternalCheckError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
