"""Command line interface.

Exit codes: 0 success, 1 domain error (bad input for an operation),
2 invariant violation or failed verification, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import diagram as dg
from . import geometry, lattice, matrixcheck, pairs, presentation
from .errors import DomainError, InvariantViolation
from .ring import ring_from_string

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _parse_vector(text: str) -> tuple:
    text = text.strip().strip("[]()")
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise DomainError(f"cannot parse vector {text!r}; expected e.g. 1,0,-1")


def _load_diagram(args) -> dg.Diagram:
    if getattr(args, "diagram", None):
        return dg.diagram_by_name(args.diagram)
    if getattr(args, "edges", None) is not None:
        if args.rank is None:
            raise DomainError("--edges needs --rank")
        try:
            edges = json.loads(args.edges)
        except json.JSONDecodeError:
            raise DomainError(f"cannot parse --edges {args.edges!r} as JSON")
        return dg.build_diagram(args.rank, [tuple(e) for e in edges],
                                name="cli-input")
    raise DomainError("give --diagram NAME or --rank N --edges JSON")


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


def cmd_catalog(args) -> int:
    names = dg.catalog_names()
    if args.json:
        data = []
        for name in names:
            d = dg.diagram_by_name(name)
            data.append({"name": name, "rank": d.rank, "edges": d.edge_list()})
        print(json.dumps(data, sort_keys=True))
        return 0
    for name in names:
        d = dg.diagram_by_name(name)
        print(f"{name}  rank {d.rank}  edges {d.edge_list()}")
    for alias, target in sorted(dg.catalog_aliases().items()):
        print(f"{alias} -> {target}")
    return 0


def cmd_classify(args) -> int:
    d = _load_diagram(args)
    t = dg.classify(d)
    hyp = dg.is_hyperbolic(d)
    sig = lattice.signature(d)
    if args.json:
        print(json.dumps({"type": str(t), "hyperbolic": hyp,
                          "signature": list(sig)}, sort_keys=True))
        return 0
    print(f"type: {t}")
    print(f"hyperbolic: {'yes' if hyp else 'no'}")
    print(f"signature: {sig}")
    return 0


def cmd_enumerate(args) -> int:
    found = dg.enumerate_hyperbolic(args.rank)
    catalog_keys = {
        dg.diagram_canonical_key(dg.diagram_by_name(n)): n
        for n in dg.catalog_names()
    }
    rows = []
    for d in found:
        key = dg.diagram_canonical_key(d)
        rows.append({"edges": d.edge_list(), "catalog": catalog_keys.get(key, "")})
    if args.json:
        print(json.dumps({"rank": args.rank, "count": len(found), "diagrams": rows},
                         sort_keys=True))
        return 0
    print(f"rank {args.rank}: {len(found)} hyperbolic diagram(s) up to isomorphism")
    for row in rows:
        tag = f"  [{row['catalog']}]" if row["catalog"] else ""
        print(f"  {row['edges']}{tag}")
    return 0


def cmd_roots(args) -> int:
    d = _load_diagram(args)
    roots = lattice.real_roots_up_to_height(d, args.height)
    if args.json:
        print(json.dumps({"count": len(roots),
                          "roots": [list(r) for r in roots]}))
        return 0
    print(f"{len(roots)} real roots of height <= {args.height}")
    if args.list:
        for r in roots:
            print(" ", ",".join(str(x) for x in r))
    else:
        byh = {}
        for r in roots:
            byh[lattice.height(r)] = byh.get(lattice.height(r), 0) + 1
        for h in sorted(byh):
            print(f"  height {h}: {byh[h]}")
    return 0


def cmd_facet_check(args) -> int:
    d = _load_diagram(args)
    rep = geometry.facet_check(d)
    if args.json:
        print(json.dumps({
            "diagram": d.name,
            "bound": str(geometry.BOUND),
            "bound_holds": rep.bound_holds,
            "max_cosh2": str(rep.max_cosh2),
            "entries": [
                {"node": e.node, "neighbor": e.neighbor,
                 "cosh2": str(e.cosh2), "attains_bound": e.attains_bound}
                for e in rep.entries
            ],
        }, sort_keys=True))
        return 0
    for e in rep.entries:
        star = "  <- equality" if e.attains_bound else ""
        print(f"  wall {e.node} to wall {e.neighbor}: cosh^2 = {e.cosh2}{star}")
    print(f"max cosh^2 = {rep.max_cosh2}, bound 4/3 holds: {rep.bound_holds}")
    return 0


def cmd_prenilpotent(args) -> int:
    d = _load_diagram(args)
    a = _parse_vector(args.alpha)
    b = _parse_vector(args.beta)
    status = pairs.is_prenilpotent(d, a, b)
    out = {"prenilpotent": status, "pairing": lattice.inner(d, a, b)}
    if args.oracle:
        v = pairs.oracle_weyl(d, a, b, word_bound=args.bound,
                              node_budget=args.budget)
        out["oracle"] = {"status": v.status, "witness": v.witness}
        if v.conclusive and (v.status == "prenilpotent") != status:
            raise InvariantViolation("oracle contradicts the pairing criterion")
    if args.json:
        print(json.dumps(out, sort_keys=True))
        return 0
    print(f"pairing: {out['pairing']}")
    print(f"prenilpotent: {'yes' if status else 'no'}")
    if args.oracle:
        print(f"oracle: {out['oracle']['status']}")
    return 0


def cmd_reduce(args) -> int:
    d = _load_diagram(args)
    a = _parse_vector(args.alpha)
    b = _parse_vector(args.beta)
    cert = pairs.reduce_to_certificate(d, a, b)
    check = pairs.verify_certificate(d, cert)
    if not check:
        raise InvariantViolation(f"fresh certificate failed: {check.violation}")
    text = pairs.certificate_to_json(cert) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote certificate (depth {cert.root.depth()}) to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_emit(args) -> int:
    d = _load_diagram(args)
    ring = ring_from_string(args.ring)
    if args.kind == "steinberg":
        pres = presentation.steinberg_presentation(d, ring)
    else:
        pres = presentation.kac_moody_presentation(d, ring)
    check = presentation.check_locality(d, pres, ring)
    if not check:
        raise InvariantViolation(f"emitted presentation failed: {check.violation}")
    _emit(args, presentation.serialize_presentation(pres, args.format))
    return 0


def cmd_verify_matrix(args) -> int:
    d = _load_diagram(args)
    ring = ring_from_string(args.ring)
    rep = matrixcheck.verify_all(d, ring, window=args.window,
                                 convention=args.convention)
    if args.json:
        print(json.dumps({
            "ok": rep.ok, "ring": rep.ring_name, "kind": rep.kind,
            "convention": rep.convention, "instances": rep.instances,
            "failed": rep.failed, "by_schema": rep.by_schema,
        }, sort_keys=True))
    else:
        for schema in sorted(rep.by_schema):
            e = rep.by_schema[schema]
            print(f"  {schema}: {e['instances']} instance(s), {e['failed']} failed")
        print(f"total {rep.instances} instance(s), {rep.failed} failed, "
              f"ok: {rep.ok}")
    return 0 if rep.ok else 2


def cmd_pq_formula(args) -> int:
    val = geometry.pq_cosh2(args.k, args.m)
    via = geometry.pq_cosh2_via_projection(args.k, args.m)
    agree = val == via
    margin = val - geometry.BOUND
    if args.json:
        print(json.dumps({
            "k": args.k, "m": args.m, "cosh2": str(val),
            "cosh2_float": float(val), "projection_route": str(via),
            "routes_agree": agree, "margin_above_bound": str(margin),
        }, sort_keys=True))
    else:
        print(f"cosh^2 = {val} (= {float(val):.12g})")
        print(f"projection route: {via}, agree: {agree}")
        print(f"margin above 4/3: {margin}")
    if not agree:
        raise InvariantViolation("closed form and projection route disagree")
    return 0


def _check_threads_env() -> None:
    raw = os.environ.get("KMX_THREADS")
    if raw is None:
        return
    try:
        n = int(raw)
    except ValueError:
        n = -1
    if n < 1:
        sys.stderr.write(f"error: KMX_THREADS={raw!r} is not a positive integer\n")
        raise SystemExit(USAGE_EXIT)


def _add_diagram_args(p) -> None:
    p.add_argument("--diagram", help="catalog name, e.g. E10 or rank4-1")
    p.add_argument("--rank", type=int, help="rank for --edges input")
    p.add_argument("--edges", help='edge list as JSON, e.g. "[[0,1],[1,2]]"')


def build_parser() -> _Parser:
    p = _Parser(prog="kmx", description="exact tools for simply laced "
                "hyperbolic root lattices and their groups over rings")
    from . import __version__
    p.add_argument("--version", action="version", version=f"kmx {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("catalog", help="list the built-in diagrams")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_catalog)

    q = sub.add_parser("classify", help="diagram type, hyperbolicity, signature")
    _add_diagram_args(q)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("enumerate",
                       help="hyperbolic diagrams of a rank, up to isomorphism")
    q.add_argument("--rank", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("roots", help="real roots up to a height")
    _add_diagram_args(q)
    q.add_argument("--height", type=int, required=True)
    q.add_argument("--list", action="store_true", help="print every root")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_roots)

    q = sub.add_parser("facet-check",
                       help="wall distance bound cosh^2 <= 4/3 on a diagram")
    _add_diagram_args(q)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_facet_check)

    q = sub.add_parser("prenilpotent", help="test a pair of real roots")
    _add_diagram_args(q)
    q.add_argument("--alpha", required=True, help="root, e.g. 1,0,0,0")
    q.add_argument("--beta", required=True)
    q.add_argument("--oracle", action="store_true",
                   help="also run the definition-level search")
    q.add_argument("--bound", type=int, default=12, help="oracle word length")
    q.add_argument("--budget", type=int, default=200000,
                   help="oracle node budget")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_prenilpotent)

    q = sub.add_parser("reduce",
                       help="certificate splitting a pair down to classical leaves")
    _add_diagram_args(q)
    q.add_argument("--alpha", required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--out", help="write JSON here instead of stdout")
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("emit", help="write a presentation over a ring")
    _add_diagram_args(q)
    q.add_argument("--ring", default="Z", help='"Z", "Z/n", "Fp", or table JSON path')
    q.add_argument("--kind", choices=("steinberg", "kac_moody"),
                   default="kac_moody")
    q.add_argument("--format", choices=("json", "text", "gap_style"),
                   default="text")
    q.add_argument("--out", help="write here instead of stdout")
    q.set_defaults(func=cmd_emit)

    q = sub.add_parser("verify-matrix",
                       help="evaluate every relation in exact matrix models")
    _add_diagram_args(q)
    q.add_argument("--ring", default="Z")
    q.add_argument("--window", type=int, default=3,
                   help="integer argument window for ring-argument schemas")
    q.add_argument("--convention", choices=presentation.CONVENTIONS,
                   default="standard")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify_matrix)

    q = sub.add_parser("pq-formula",
                       help="exact distance formula for the two-parameter family")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_pq_formula)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    _check_threads_env()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except InvariantViolation as e:
        sys.stderr.write(f"invariant violation: {e}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
