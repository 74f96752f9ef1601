"""Command-line front end.

Exit status: 0 on success, 1 when the input is outside the hypotheses of
the requested invariant, 2 on unreadable input or bad arguments.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .ade import AdeType, NotAde, classify
from .cycle import NotApplicable, arithmetic_genus, fundamental_cycle, multiplicity
from .graph import (
    DualGraph,
    GraphError,
    cross_graph,
    loop_graph,
    parse_graph,
    render,
    standard_diagram,
    t_tree,
    to_dot,
)
from .lattice import Definiteness, DefinitenessKind, definiteness, determinant, intersection_matrix
from .quotient import (
    CyclicType,
    FiniteSubgroup,
    chain_graph,
    group_order,
    hj_expand,
    invariant_equation,
    mckay_type,
    render_equation,
)
from .roots import cartan_matrix, generate_roots, highest_root, positive_and_simple
from .schemas import SCHEMA_VERSION


class Refusal(Exception):
    """Domain refusal; maps to exit status 1."""


@dataclass(frozen=True)
class Report:
    graph: str
    vertices: tuple[str, ...]
    definiteness: Definiteness
    classification: AdeType | NotAde
    fundamental_cycle: Optional[tuple[int, ...]]
    arithmetic_genus: Optional[int]
    rational: Optional[bool]
    multiplicity: Optional[int]
    refusal: Optional[str]


def build_report(g: DualGraph) -> Report:
    form = definiteness(intersection_matrix(g))
    z = genus = rational = mult = refusal = None
    try:
        z = fundamental_cycle(g)
    except NotApplicable as exc:
        refusal = str(exc)
    if z is not None:
        genus = arithmetic_genus(z, g)
        rational = genus == 0
        if rational:
            mult = multiplicity(g)
    return Report(g.name, g.ids, form, classify(g), z, genus, rational, mult, refusal)


def _graph_json(g: DualGraph) -> dict[str, Any]:
    return {
        "vertices": [{"id": v.id, "weight": v.weight, "genus": v.genus} for v in g.vertices],
        "edges": [{"u": e.u, "v": e.v, "mult": e.mult} for e in g.edges],
    }


def _cycle_json(g: DualGraph, z: Sequence[int]) -> dict[str, int]:
    return dict(zip(g.ids, z))


def _classification_json(c: AdeType | NotAde) -> dict[str, Any]:
    if isinstance(c, AdeType):
        return {"type": str(c), "reason": None, "witness": []}
    return {"type": None, "reason": c.reason.value, "witness": list(c.witness)}


def report_json(r: Report) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": "check",
        "graph": r.graph,
        "vertices": list(r.vertices),
        "definiteness": {
            "kind": r.definiteness.kind.value,
            "witness": list(r.definiteness.witness) if r.definiteness.witness else None,
        },
        "classification": _classification_json(r.classification),
        "fundamental_cycle": dict(zip(r.vertices, r.fundamental_cycle)) if r.fundamental_cycle else None,
        "arithmetic_genus": r.arithmetic_genus,
        "rational": r.rational,
        "multiplicity": r.multiplicity,
        "refusal": r.refusal,
    }


def _ints(v: Sequence[int]) -> str:
    return " ".join(map(str, v))


def _classification_text(c: AdeType | NotAde) -> str:
    return str(c) if isinstance(c, AdeType) else f"not ADE: {c}"


def report_text(r: Report) -> str:
    d = r.definiteness
    form = d.describe()
    if d.kind is DefinitenessKind.DEGENERATE:
        form += f", null vector {_ints(d.witness)}"
    elif d.kind is DefinitenessKind.INDEFINITE:
        form += f", positive vector {_ints(d.witness)}"
    undefined = f"undefined ({r.refusal})"
    lines = [
        f"graph: {r.graph}",
        f"vertices: {' '.join(r.vertices)}",
        f"definiteness: {form}",
        f"classification: {_classification_text(r.classification)}",
        f"fundamental cycle: {_ints(r.fundamental_cycle) if r.fundamental_cycle else undefined}",
        f"arithmetic genus: {undefined if r.arithmetic_genus is None else r.arithmetic_genus}",
        f"rational: {undefined if r.rational is None else ('yes' if r.rational else 'no')}",
        "multiplicity: "
        + (str(r.multiplicity) if r.multiplicity is not None
           else undefined if r.rational is None else "undefined (graph is not rational)"),
    ]
    return "\n".join(lines) + "\n"


def _dump(obj: dict[str, Any]) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read_graph(path: str, name: Optional[str]) -> DualGraph:
    if path == "-":
        text, default = sys.stdin.read(), "stdin"
    else:
        text, default = Path(path).read_text(encoding="utf-8"), Path(path).stem
    return parse_graph(text, name=name or default or "G")


_T_RE = re.compile(r"^T\(?(\d+),(\d+),(\d+)\)?$")
_LOOP_RE = re.compile(r"^loop(\d+)$")
_CROSS_RE = re.compile(r"^cross(\d+)$")


def graph_from_token(token: str) -> DualGraph:
    """``A<n>``, ``D<n>``, ``E6..E8``, ``T<p>,<q>,<r>``, ``loop<n>`` or ``cross<n>``."""
    try:
        if m := _T_RE.match(token):
            return t_tree(*map(int, m.groups()))
        if m := _LOOP_RE.match(token):
            return loop_graph(int(m.group(1)))
        if m := _CROSS_RE.match(token):
            return cross_graph(int(m.group(1)))
        return standard_diagram(AdeType.parse(token))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ade_token(token: str) -> AdeType:
    try:
        return AdeType.parse(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _group_token(token: str) -> FiniteSubgroup:
    try:
        g = FiniteSubgroup.parse(token)
        mckay_type(g)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return g


def _emit_graph(g: DualGraph, fmt: str) -> str:
    return to_dot(g) if fmt == "dot" else render(g)


def cmd_check(args: argparse.Namespace) -> str:
    r = build_report(_read_graph(args.file, args.name))
    return _dump(report_json(r)) if args.format == "json" else report_text(r)


def cmd_classify(args: argparse.Namespace) -> str:
    g = _read_graph(args.file, args.name)
    c = classify(g)
    if args.format == "json":
        return _dump({"schema": SCHEMA_VERSION, "command": "classify", "graph": g.name,
                      "classification": _classification_json(c)})
    return _classification_text(c) + "\n"


def _fundamental(g: DualGraph) -> tuple[int, ...]:
    try:
        return fundamental_cycle(g)
    except NotApplicable as exc:
        raise Refusal(str(exc)) from None


def cmd_zn(args: argparse.Namespace) -> str:
    g = _read_graph(args.file, args.name)
    z = _fundamental(g)
    if args.format == "json":
        return _dump({"schema": SCHEMA_VERSION, "command": "zn", "graph": g.name,
                      "fundamental_cycle": _cycle_json(g, z)})
    return " + ".join(f"{r}*{i}" for i, r in zip(g.ids, z)) + "\n"


def cmd_rational(args: argparse.Namespace) -> str:
    g = _read_graph(args.file, args.name)
    genus = arithmetic_genus(_fundamental(g), g)
    if args.format == "json":
        return _dump({"schema": SCHEMA_VERSION, "command": "rational", "graph": g.name,
                      "rational": genus == 0, "arithmetic_genus": genus})
    verdict = "rational" if genus == 0 else "not rational"
    return f"{verdict} (p_a(Z_num) = {genus})\n"


def cmd_mult(args: argparse.Namespace) -> str:
    g = _read_graph(args.file, args.name)
    _fundamental(g)
    try:
        m = multiplicity(g)
    except NotApplicable as exc:
        raise Refusal(str(exc)) from None
    if args.format == "json":
        return _dump({"schema": SCHEMA_VERSION, "command": "mult", "graph": g.name, "multiplicity": m})
    return f"{m}\n"


def cmd_gen(args: argparse.Namespace) -> str:
    g = args.graph
    if args.format == "json":
        return _dump({"schema": SCHEMA_VERSION, "command": "gen", "name": g.name, "graph": _graph_json(g)})
    return _emit_graph(g, args.format)


def cmd_hj(args: argparse.Namespace) -> str:
    try:
        chain = hj_expand(CyclicType(args.n, args.q))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    g = chain_graph(chain)
    if args.format == "json":
        return _dump({"schema": SCHEMA_VERSION, "command": "hj", "n": args.n, "q": args.q,
                      "chain": list(chain), "graph": _graph_json(g)})
    if args.format == "dot":
        return to_dot(g)
    return "[" + ",".join(map(str, chain)) + "]\n" + render(g)


def cmd_mckay(args: argparse.Namespace) -> str:
    grp = args.group
    t = mckay_type(grp)
    eq = invariant_equation(grp)
    g = standard_diagram(t)
    if args.format == "json":
        return _dump({
            "schema": SCHEMA_VERSION,
            "command": "mckay",
            "group": str(grp),
            "type": str(t),
            "order": group_order(grp),
            "equation": {
                "text": render_equation(eq),
                "monomials": [{"coefficient": c, "exponents": list(e)} for c, e in eq],
            },
            "graph": _graph_json(g),
        })
    if args.format == "dot":
        return to_dot(g)
    return f"{t}, order {group_order(grp)}, {render_equation(eq)}\n" + render(g)


def cmd_roots(args: argparse.Namespace) -> str:
    t = args.type
    c = cartan_matrix(t)
    rs = generate_roots(c)
    positives, _ = positive_and_simple(rs)
    top = highest_root(rs)
    det = determinant(c)
    if args.format == "json":
        return _dump({
            "schema": SCHEMA_VERSION,
            "command": "roots",
            "type": str(t),
            "order": list(standard_diagram(t).ids),
            "count": len(rs),
            "positive_count": len(positives),
            "highest_root": list(top),
            "cartan_determinant": det,
        })
    return (
        f"type: {t}\ncount: {len(rs)}\npositive roots: {len(positives)}\n"
        f"highest root: {_ints(top)}\ncartan determinant: {det}\n"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duval",
        description="Exact invariants of resolution graphs of surface singularities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    graph_cmds = {
        "check": (cmd_check, "full report: definiteness, ADE type, Z_num, genus, rationality, multiplicity"),
        "classify": (cmd_classify, "ADE type or the reason the graph is not ADE"),
        "zn": (cmd_zn, "fundamental cycle"),
        "rational": (cmd_rational, "Artin rationality test"),
        "mult": (cmd_mult, "multiplicity -Z_num^2 of a rational graph"),
    }
    for name, (func, help_text) in graph_cmds.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file, or - for standard input")
        p.add_argument("--name", help="graph name used in reports")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="emit a standard graph (A<n>, D<n>, E6-8, T<p>,<q>,<r>, loop<n>, cross<n>)")
    p.add_argument("graph", type=graph_from_token, metavar="TYPE")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hj", help="Hirzebruch-Jung chain of the cyclic quotient of type (n, q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_hj)

    p = sub.add_parser("mckay", help="ADE type, order and equation of C^2/G (C<n>, D~<n>, T~, O~, I~)")
    p.add_argument("group", type=_group_token, metavar="GROUP")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_mckay)

    p = sub.add_parser("roots", help="root system of an ADE type")
    p.add_argument("type", type=_ade_token, metavar="TYPE")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"duval: error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"duval: {exc}", file=sys.stderr)
        return 2
    except Refusal as exc:
        print(f"duval: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
