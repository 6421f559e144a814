"""Command-line interface: ``python -m rootlat <command>`` or ``rootlat <command>``.

Exit codes: 0 ok, 2 bad input, 3 root cap exceeded, 4 unmet precondition,
5 domain error (e.g. an expression that is not an algebraic integer).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from rootlat import __version__
from rootlat.cyclo import canonicalize, kronecker_classify
from rootlat.errors import (
    CapExceeded,
    DivisionByZero,
    NotAlgebraicInteger,
    NotInQK,
    NotReal,
    NotSubfield,
    RootLatError,
)
from rootlat.expr import parse_value
from rootlat.fieldspec import FieldDescriptor, make_field
from rootlat.qgraph import compute_qk, extend_classes, rank2_roots, report
from rootlat.rootsys import (
    CoxeterType,
    GramMatrix,
    RootVec,
    enumerate_roots,
    gram_of_type,
    sorted_roots,
)

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_PRECONDITION, EXIT_DOMAIN = 0, 2, 3, 4, 5


class InputError(RootLatError, ValueError):
    pass


def parse_gens(text: str) -> FieldDescriptor:
    text = text.strip()
    if not text:
        return make_field([])
    try:
        gens = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad generator list {text!r}") from exc
    return make_field(gens)


def _format(obj, indent: int = 0) -> str:
    # scalar lists stay on one line; everything else nests with two spaces
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_format(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        items = [inner + _format(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def _dumps(obj) -> str:
    return _format(obj) + "\n"


def cmd_field(args) -> str:
    F = parse_gens(args.gens)
    return (f"gens: {list(F.gens)}\nmodulus: {F.modulus}\n"
            f"subgroup_order: {len(F.group)}\ndegree: {F.degree}\n")


def cmd_qgraph(args) -> str:
    F = parse_gens(args.gens)
    G = compute_qk(F)
    if args.format == "dot":
        return G.to_dot()
    return _dumps({
        "vertices": list(G.vertices),
        "edges": [list(e) for e in G.edges],
        "components": [list(c) for c in G.components],
    })


def cmd_classify(args) -> str:
    if args.nmax < 3:
        raise InputError("--nmax must be at least 3")
    F = parse_gens(args.gens)
    doc = {"tool": "rootlat", "version": __version__,
           "input": {"gens": list(F.gens), "nmax": args.nmax}}
    doc.update(report(F, args.nmax))
    return _dumps(doc)


def _load_gram(path: str) -> GramMatrix:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read Gram file {path}: {exc}") from exc
    rows = data["gram"] if isinstance(data, dict) else data
    return GramMatrix([[parse_value(str(x)) for x in row] for row in rows])


def _root_list(roots: Sequence[RootVec]) -> list[list[str]]:
    return [[str(canonicalize(c)) for c in r.coords] for r in sorted_roots(roots)]


def cmd_roots(args) -> str:
    if (args.type is None) == (args.gram is None):
        raise InputError("give exactly one of --type and --gram")
    if args.type is not None:
        t = CoxeterType.parse(args.type)
        if args.gens is not None:
            # checked on the raw text: I2(3) and I2(4) normalize to A2 and B2
            m = re.fullmatch(r"I_?2\((\d+)\)", args.type.replace(" ", ""))
            if m is None:
                raise InputError("--gens applies only to --type I2(m)")
            F = parse_gens(args.gens)
            pairs = rank2_roots(F, int(m.group(1)))
            rows = sorted([[str(a), str(b)] for a, b in pairs])
            doc = {"type": f"I2({m.group(1)})", "gens": list(F.gens), "count": len(rows)}
            if args.emit == "count":
                return f"{len(rows)}\n"
            doc["roots"] = rows
            return _dumps(doc)
        G = gram_of_type(t)
        cap = args.cap if args.cap is not None else 2 * t.expected_size()
        label = str(t)
    else:
        G = _load_gram(args.gram)
        cap = args.cap if args.cap is not None else 10_000
        label = None
    roots = enumerate_roots(G, cap)
    if args.emit == "count":
        return f"{len(roots)}\n"
    doc = {"type": label, "gram": G.to_rows(), "count": len(roots), "roots": _root_list(roots)}
    return _dumps(doc)


def cmd_extend(args) -> str:
    F1, F2 = parse_gens(args.gens1), parse_gens(args.gens2)
    mapping = extend_classes(F1, F2)
    rows = [{"from": a.label, "to": b.label,
             "from_members": list(a.members), "to_members": list(b.members)}
            for a, b in sorted(mapping.items())]
    return _dumps({"from": {"gens": list(F1.gens)}, "to": {"gens": list(F2.gens)}, "map": rows})


def cmd_kronecker(args) -> str:
    value = parse_value(args.expression)
    return f"{kronecker_classify(value)}\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootlat", description="Root lattices over real cyclotomic fields.")
    p.add_argument("--version", action="version", version=f"rootlat {__version__}")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def gens_arg(sp):
        sp.add_argument("--gens", default="", help="comma list of n, K = Q(zeta_2n^+ : n); empty means Q")

    sp = sub.add_parser("field", help="degree and modulus of a field")
    gens_arg(sp)
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("qgraph", help="the graph Q_K")
    gens_arg(sp)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.set_defaults(func=cmd_qgraph)

    sp = sub.add_parser("classify", help="rank-2 classes and rank >= 3 existence")
    gens_arg(sp)
    sp.add_argument("--nmax", type=int, default=8)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("roots", help="enumerate a root system")
    sp.add_argument("--type", help="Coxeter type such as E8, B3 or I2(7)")
    sp.add_argument("--gram", metavar="FILE", help='JSON file {"gram": [[...], ...]} of expressions')
    sp.add_argument("--gens", default=None, help="field context for I2(m): list the roots of O[zeta_2m]")
    sp.add_argument("--emit", choices=("count", "list"), default="count")
    sp.add_argument("--cap", type=int, default=None)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("extend", help="map rank-2 classes along a field extension")
    sp.add_argument("gens1")
    sp.add_argument("gens2")
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("kronecker", help="Kronecker classification of an expression")
    sp.add_argument("expression")
    sp.set_defaults(func=cmd_kronecker)
    return p


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    if isinstance(exc, (NotSubfield, NotInQK)):
        return EXIT_PRECONDITION
    if isinstance(exc, (NotAlgebraicInteger, NotReal, DivisionByZero)):
        return EXIT_DOMAIN
    return EXIT_INPUT


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    # leading "-" in expressions is not an option
    argv = list(sys.argv[1:] if argv is None else argv)
    if "kronecker" in argv:
        i = argv.index("kronecker")
        if i + 1 < len(argv) and argv[i + 1] not in ("--", "-h", "--help"):
            argv.insert(i + 1, "--")
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except (RootLatError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
