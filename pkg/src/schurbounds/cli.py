"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (out-of-class or non-graphical
input, failed verification), 2 on unparseable input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .bounds import FAMILIES, BoundsReport, closed_form_family, zagreb_bounds
from .errors import SchurBoundsError
from .graphs import (
    DegreeSequence,
    SimpleGraph,
    degree_sequence_of,
    enumerate_realizations,
    is_graphical,
    zagreb_exact,
)
from .oracle import verify_extremal

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class ParseError(ValueError):
    pass


class DomainFailure(Exception):
    """Raised after output has been written, to turn a negative verdict into exit 1."""


# ---------------------------------------------------------------------------
# input parsing

def parse_int_list(text: str, what: str = "value") -> List[int]:
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise ParseError(f"no {what}s given")
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer {what}: {tok!r}") from None
    return out


def parse_degrees(text: str) -> Tuple[List[int], bool]:
    """Degrees from comma/whitespace separated text, sorted nonincreasing.

    The flag is True when the input had to be reordered.
    """
    raw = parse_int_list(text, "degree")
    if any(d < 0 for d in raw):
        raise ParseError(f"negative degree in {raw}")
    ordered = sorted(raw, reverse=True)
    return ordered, ordered != raw


def parse_edge_list(text: str) -> List[Tuple[int, int]]:
    """One edge per line, two 0-based vertex indices; blank lines and ``#`` comments skipped."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex indices, got {body!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex indices must be integers, got {body!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    if not edges:
        raise ParseError("edge list is empty")
    return edges


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> SimpleGraph:
    edges = parse_edge_list(_read(path))
    n = 1 + max(max(e) for e in edges)
    return SimpleGraph(n, edges)


def load_degrees(args) -> List[int]:
    if args.edges:
        return sorted(load_graph(args.edges).degrees(), reverse=True)
    if args.degrees is not None:
        text = args.degrees
    elif args.degree_file:
        text = _read(args.degree_file)
    else:
        raise ParseError("one of --degrees, --degree-file or --edges is required")
    degrees, reordered = parse_degrees(text)
    if reordered:
        print(f"note: degrees reordered to {','.join(map(str, degrees))}", file=sys.stderr)
    return degrees


# ---------------------------------------------------------------------------
# commands

def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _trace_line(label: str, t) -> str:
    extra = f"theta={_fmt(t.theta)}" if t.theta is not None else f"rho={_fmt(t.rho)}"
    return f"{label}: branch={t.branch} k={t.k} d={t.d} {extra} vector={t.vector.tolist()}"


def _fmt(v) -> str:
    if v is None:
        return "-"
    return str(int(v)) if float(v).is_integer() else f"{v:.6g}"


def _bounds_text(report: BoundsReport) -> str:
    sp = report.spec
    lines = [
        f"n={sp.n} m={sp.m_edges} h={sp.h} a={sp.a}",
        f"edge-sum blocks: {sp.m_edges - sp.h} in [{sp.m1}, {sp.M1}], {sp.h} in [{sp.m2}, {sp.M2}]",
        f"lower={report.lower} upper={report.upper}",
        f"das_gutman={report.comparison}",
        _trace_line("upper", report.traces[0]),
        _trace_line("lower", report.traces[1]),
        f"lower (integer) vector={report.lower_vector.tolist()}",
    ]
    return "\n".join(lines)


def cmd_bounds(args) -> int:
    seq = DegreeSequence(tuple(load_degrees(args)))
    report = zagreb_bounds(seq)
    payload = report.as_dict()
    payload["degrees"] = list(seq.degrees)
    _emit(args, payload, _bounds_text(report))
    return EXIT_OK


def cmd_exact(args) -> int:
    if not args.edges:
        raise ParseError("exact needs --edges")
    g = load_graph(args.edges)
    value = zagreb_exact(g)
    payload = {"n": g.n, "m": len(g.edges), "degrees": list(degree_sequence_of(g).degrees), "S": value}
    _emit(args, payload, f"S(G)={value}")
    return EXIT_OK


def cmd_closed_form(args) -> int:
    if not args.family or args.params is None:
        raise ParseError("closed-form needs --family and --params")
    params = parse_int_list(args.params, "parameter")
    report = closed_form_family(args.family, params)
    payload = report.as_dict()
    payload["params"] = params
    text = (f"family={args.family} params={','.join(map(str, params))} "
            f"lower={report.lower} upper={report.upper} das_gutman={report.comparison}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    seq = DegreeSequence(tuple(load_degrees(args)))
    report = zagreb_bounds(seq)
    check = verify_extremal(report.spec.block_set, seed=args.seed)

    sandwich = None
    if seq.n <= args.max_enum:
        graphs = enumerate_realizations(seq, vertex_cap=args.max_enum)
        values = sorted({zagreb_exact(g) for g in graphs})
        outside = [v for v in values if not report.lower <= v <= report.upper]
        sandwich = {"realizations": len(graphs), "values": values, "outside": outside}

    ok = check.passed and (sandwich is None or not sandwich["outside"])
    payload = {
        "lower": report.lower, "upper": report.upper,
        "extremality": {"mode": check.mode, "members": check.members_checked,
                        "passed": check.passed, "failures": check.failures},
        "sandwich": sandwich, "passed": ok,
    }
    lines = [f"lower={report.lower} upper={report.upper}", "extremality " + check.summary()]
    if sandwich is None:
        lines.append(f"sandwich: skipped (n={seq.n} > --max-enum {args.max_enum})")
    else:
        verdict = "PASS" if not sandwich["outside"] else f"FAIL outside={sandwich['outside']}"
        lines.append(f"sandwich {verdict}: {sandwich['realizations']} realizations, S values {values}")
    _emit(args, payload, "\n".join(lines))
    if not ok:
        raise DomainFailure("verification failed")
    return EXIT_OK


def cmd_graphical(args) -> int:
    degrees = load_degrees(args)
    verdict = is_graphical(degrees)
    _emit(args, {"degrees": degrees, "graphical": verdict},
          f"graphical: {'true' if verdict else 'false'}")
    if not verdict:
        raise DomainFailure("sequence is not graphical")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurbounds",
        description="Majorization-based bounds for the second Zagreb index.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if inputs:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--degrees", help="comma or space separated degrees")
            src.add_argument("--degree-file", help="file holding the degrees")
            src.add_argument("--edges", help="edge list file: two 0-based indices per line")
        return p

    common(sub.add_parser("bounds", help="lower/upper bounds from a degree sequence")).set_defaults(func=cmd_bounds)
    common(sub.add_parser("exact", help="exact S(G) of an edge list")).set_defaults(func=cmd_exact)

    p = common(sub.add_parser("closed-form", help="closed-form bounds of a named family"), inputs=False)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--params", help="comma separated integers, e.g. 3,2")
    p.set_defaults(func=cmd_closed_form)

    p = common(sub.add_parser("verify", help="brute-force check of the bounds"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-enum", type=int, default=8,
                   help="largest vertex count for which realizations are enumerated")
    p.set_defaults(func=cmd_verify)

    common(sub.add_parser("graphical", help="Erdős–Gallai verdict")).set_defaults(func=cmd_graphical)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainFailure:
        return EXIT_DOMAIN
    except SchurBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
