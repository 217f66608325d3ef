"""Command-line front end.

Subcommands: trees, coproduct, shuffle, derive, dtree, taylor, prim-dim,
hw-dim, verify, seq, iso.  Output is text (canonical term order) or JSON
with a pinned ``"schema": 1`` field.  Exit status: 0 success, 1 verification
failure, 2 usage or parse error.  Polynomial arguments read stdin when
given as ``-``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import isos, magma, primitives, verify
from .linear import LinComb, format_poly, parse_poly
from .trees import (ParseError, SEQUENCE_KINDS, TreeError, enumerate_trees,
                    format_tree, sequence)

SCHEMA = 1


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    pass


def _poly_arg(text: str) -> LinComb:
    if text == "-":
        text = sys.stdin.read()
    return parse_poly(text)


def _emit(args, text_fn, payload: dict):
    if args.format == "json":
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, default=str))
    else:
        print(text_fn())


def _cmd_trees(args) -> int:
    labels = None
    if args.vars:
        labels = [(i % args.vars) + 1 for i in range(args.leaves)]
    ts = enumerate_trees(args.leaves, binary=args.binary, labels=labels)
    _emit(args, lambda: "\n".join(format_tree(t) for t in ts),
          {"count": len(ts), "trees": [format_tree(t) for t in ts]})
    return 0


def _cmd_coproduct(args) -> int:
    from . import hopf
    f = _poly_arg(args.poly)
    d = hopf.coproduct(args.kind, f)
    _emit(args, lambda: format_poly(d),
          {"kind": args.kind, "input": format_poly(f), "coproduct": format_poly(d)})
    return 0


def _cmd_shuffle(args) -> int:
    from . import hopf
    f, g = _poly_arg(args.left), _poly_arg(args.right)
    r = hopf.shuffle(f, g, binary=args.operad == "mag")
    _emit(args, lambda: format_poly(r),
          {"operad": args.operad, "shuffle": format_poly(r)})
    return 0


def _cmd_derive(args) -> int:
    f = _poly_arg(args.poly)
    if args.to is not None:
        r = magma.partial_kj(args.var, args.to, f)
    else:
        r = magma.partial_k(args.var, f)
    _emit(args, lambda: format_poly(r), {"derivative": format_poly(r)})
    return 0


def _cmd_dtree(args) -> int:
    s = _poly_arg(args.tree)
    f = _poly_arg(args.poly)
    r = magma.partial_tree(s, f)
    _emit(args, lambda: format_poly(r), {"derivative": format_poly(r)})
    return 0


def _cmd_taylor(args) -> int:
    f = _poly_arg(args.poly)
    tay = magma.taylor_expand(f, args.vars)
    rows = [(j, format_poly(c)) for j, c in sorted(tay.coefficients.items())]
    _emit(args, lambda: "\n".join("%s: %s" % (list(j), c) for j, c in rows),
          {"vars": args.vars,
           "coefficients": [{"exponents": list(j), "value": c} for j, c in rows]})
    return 0


def _cmd_prim_dim(args) -> int:
    if args.multilinear:
        comp = primitives.component(args.operad, multilinear=args.degree)
    else:
        comp = primitives.component(args.operad, degree=args.degree)
    rep = primitives.component_report(comp)
    ok = rep.get("match", True)

    def text():
        lines = ["ambient %d, primitive %d" % (rep["ambientDim"], rep["primDim"])]
        if "formulaDim" in rep:
            lines.append("formula %d (%s)" % (
                rep["formulaDim"], "match" if rep["match"] else "MISMATCH"))
        lines.extend(rep["basisSample"])
        return "\n".join(lines)

    _emit(args, text, rep)
    return 0 if ok else 1


def _cmd_hw_dim(args) -> int:
    md = tuple(int(x) for x in args.multidegree.split(","))
    basis = primitives.highest_weight_basis(md, args.constraint,
                                            binary=args.operad == "mag")
    _emit(args, lambda: "\n".join([str(len(basis))]
                                  + [format_poly(b) for b in basis[:args.sample]]),
          {"multidegree": list(md), "constraint": args.constraint,
           "dim": len(basis),
           "basisSample": [format_poly(b) for b in basis[:args.sample]]})
    return 0


def _cmd_verify(args) -> int:
    names = list(verify.CHECKS) if args.check == "all" else [args.check]
    reports = []
    ok = True
    for rep in verify.run_checks(names, max_degree=args.max_degree):
        reports.append(rep)
        ok = ok and rep["ok"]
        if args.format != "json":
            print("%s %s (%.2fs)" % ("PASS" if rep["ok"] else "FAIL",
                                     rep["name"], rep["seconds"]))
            if not rep["ok"]:
                print("  %s" % json.dumps(
                    {k: v for k, v in rep.items()
                     if k not in ("name", "ok", "seconds", "rows")},
                    default=str))
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "ok": ok, "checks": reports},
                         default=str))
    else:
        print("%d/%d checks passed" % (sum(r["ok"] for r in reports), len(reports)))
    return 0 if ok else 1


def _cmd_seq(args) -> int:
    vals = sequence(args.kind, args.count)
    _emit(args, lambda: " ".join(str(v) for v in vals),
          {"kind": args.kind, "values": vals})
    return 0


def _cmd_iso(args) -> int:
    f = _poly_arg(args.poly)
    fn = {"theta": isos.theta, "xi": isos.xi, "psi": isos.psi}[args.map]
    r = fn(f)
    _emit(args, lambda: format_poly(r), {"map": args.map, "image": format_poly(r)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _CliParser(prog="treehopf",
                   description="exact computations in planar-tree Hopf algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("trees", help="enumerate reduced planar trees")
    sp.add_argument("leaves", type=int)
    sp.add_argument("--binary", action="store_true")
    sp.add_argument("--vars", type=int, default=0,
                    help="cycle labels x1..xm over the leaves")
    common(sp)
    sp.set_defaults(fn=_cmd_trees)

    sp = sub.add_parser("coproduct", help="apply a coproduct to a polynomial")
    sp.add_argument("--kind", choices=("coadd", "lr", "ck", "bf"), default="coadd")
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(fn=_cmd_coproduct)

    sp = sub.add_parser("shuffle", help="dual shuffle product of two polynomials")
    sp.add_argument("--operad", choices=("mag", "magw"), default="magw")
    sp.add_argument("left")
    sp.add_argument("right")
    common(sp)
    sp.set_defaults(fn=_cmd_shuffle)

    sp = sub.add_parser("derive", help="partial derivative")
    sp.add_argument("--var", type=int, required=True)
    sp.add_argument("--to", type=int, default=None,
                    help="relabel to this variable instead of erasing")
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(fn=_cmd_derive)

    sp = sub.add_parser("dtree", help="generalized differential operator")
    sp.add_argument("tree", help="the operator monomial (or homogeneous polynomial)")
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(fn=_cmd_dtree)

    sp = sub.add_parser("taylor", help="right Taylor expansion")
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(fn=_cmd_taylor)

    sp = sub.add_parser("prim-dim", help="primitive dimension of a component")
    sp.add_argument("--operad", choices=("mag", "magw"), default="mag")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--multilinear", action="store_true")
    common(sp)
    sp.set_defaults(fn=_cmd_prim_dim)

    sp = sub.add_parser("hw-dim", help="highest weight vector space")
    sp.add_argument("--operad", choices=("mag", "magw"), default="mag")
    sp.add_argument("--multidegree", required=True, help="e.g. 3,1")
    sp.add_argument("--constraint", choices=("primitive", "constant"),
                    default="primitive")
    sp.add_argument("--sample", type=int, default=3)
    common(sp)
    sp.set_defaults(fn=_cmd_hw_dim)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("check", choices=tuple(verify.CHECKS) + ("all",))
    sp.add_argument("--max-degree", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("seq", help="integer sequence values")
    sp.add_argument("kind", choices=SEQUENCE_KINDS)
    sp.add_argument("--count", type=int, default=10)
    common(sp)
    sp.set_defaults(fn=_cmd_seq)

    sp = sub.add_parser("iso", help="apply a Hopf isomorphism")
    sp.add_argument("map", choices=("theta", "xi", "psi"))
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(fn=_cmd_iso)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except SystemExit2 as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except (ParseError, TreeError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
