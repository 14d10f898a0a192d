"""Command-line front end.

Exit status: 0 pass, 1 property failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import expr
from .cohn import CohnAlgebra
from .coefficients import LocalRationalAlgebra, PolynomialAlgebra, ScalarAlgebra
from .graph import (
    GraphError,
    enumerate_hsat,
    hereditary_saturated_check,
    hsat_closure,
    parse_graph,
)
from .leavitt import LeavittAlgebra, graded_simple, homogeneous_degrees
from .scalars import field_from_name


class UsageError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path):
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _subset(g, text):
    names = [s for s in (text or "").replace(",", " ").split() if s]
    for n in names:
        if not g.has_vertex(n):
            raise UsageError(f"unknown vertex {n!r} in --set")
    return frozenset(names)


def _fmt_set(g, w):
    return "{" + ", ".join(v for v in g.vertices if v in w) + "}"


def _wreath(args, field):
    from .wreath import WreathAlgebra, parse_extension

    g = _graph(args.graph)
    if not args.ext:
        raise UsageError("--ext EXTENSION-FILE is required")
    try:
        eg = parse_extension(_read(args.ext), g, field=field)
    except ValueError as exc:
        raise UsageError(f"{args.ext}: {exc}") from None
    return WreathAlgebra(eg)


def _parse_all(alg, exprs):
    if not exprs:
        raise UsageError("at least one --expr is required")
    out = []
    for text in exprs:
        try:
            out.append(alg.parse(text))
        except (expr.ExpressionError, GraphError, ValueError) as exc:
            raise UsageError(f"bad expression {text!r}: {exc}") from None
    return out


def _product(xs):
    out = xs[0]
    for x in xs[1:]:
        out = out * x
    return out


def _report(rep, out):
    print(rep, file=out)
    return 0 if rep else 1


# subcommands


def cmd_graph(args, field, out):
    g = _graph(args.graph)
    sinks = [v for v in g.vertices if g.is_sink(v)]
    print(f"vertices: {' '.join(g.vertices)}", file=out)
    print(f"edges: {' '.join(f'{e.id}:{e.source}->{e.range}' for e in g.edges)}", file=out)
    print(f"sinks: {' '.join(sinks) or '-'}", file=out)
    print("OK", file=out)
    return 0


def cmd_hsat(args, field, out):
    g = _graph(args.graph)
    if args.action == "enumerate":
        for w in enumerate_hsat(g, args.bound):
            print(_fmt_set(g, w), file=out)
        return 0
    w = _subset(g, args.set)
    if args.action == "closure":
        print(_fmt_set(g, hsat_closure(g, w)), file=out)
        return 0
    h, s = hereditary_saturated_check(g, w)
    print(f"hereditary: {'yes' if h else 'no'}", file=out)
    print(f"saturated: {'yes' if s else 'no'}", file=out)
    print("PASS" if h and s else "FAIL", file=out)
    return 0 if h and s else 1


def cmd_path_algebra(cls):
    def run(args, field, out):
        alg = cls(_graph(args.graph), field)
        if args.action == "graded":
            g = alg.graph
            ok = graded_simple(g)
            for w in enumerate_hsat(g):
                print(_fmt_set(g, w), file=out)
            print(f"graded simple: {'yes' if ok else 'no'}", file=out)
            return 0
        xs = _parse_all(alg, args.expr)
        if args.action == "nf" and len(xs) > 1:
            raise UsageError("nf takes exactly one --expr")
        res = _product(xs)
        print(res, file=out)
        if getattr(args, "degrees", False):
            print("degrees: " + " ".join(str(d) for d in sorted(homogeneous_degrees(res))), file=out)
        return 0
    return run


def cmd_wreath(args, field, out):
    alg = _wreath(args, field)
    xs = _parse_all(alg, args.expr)
    if args.action == "nf" and len(xs) > 1:
        raise UsageError("nf takes exactly one --expr")
    print(_product(xs), file=out)
    return 0


def cmd_lemma(args, field, out):
    from .wreath import probes

    alg = _wreath(args, field)
    eg = alg.eg
    kind = args.kind
    if kind == "assoc":
        rep = probes.lemma1_check(eg, args.samples, args.seed)
    elif kind == "actions":
        rep = probes.lemma2_check(eg, args.bound)
        rep.merge(probes.lemma3_check(eg, args.bound))
    elif kind == "ck":
        rep = probes.lemma4_check(alg, args.bound, args.seed)
    else:
        rep = probes.lemma6_check(alg, args.samples, args.seed)
    return _report(rep, out)


def cmd_prop1(args, field, out):
    from .wreath import WreathAlgebra, loop_extension, prop1_search

    if args.graph:
        alg = _wreath(args, field)
        gens = [e for e in alg.coeff.idempotents.values()]
    else:
        A = PolynomialAlgebra(field)
        alg = WreathAlgebra(loop_extension(A))
        gens = [A.x]
    rep = prop1_search(alg, gens, index_len=args.index_len, word_len=args.word_len, max_word=args.max_word)
    code = _report(rep, out)
    if args.witnesses and rep.witness:
        for t, w in rep.witness.items():
            print(f"  {t} <= {w}", file=out)
    return code


def cmd_prop2(args, field, out):
    from .wreath import prop2_verify

    g = _graph(args.graph)
    w = _subset(g, args.set)
    try:
        rep = prop2_verify(g, w, args.maxlen, args.samples, args.seed, field)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    return _report(rep, out)


def cmd_balloon(args, field, out):
    from .wreath import balloon_iso_check

    g = _graph(args.graph)
    if not g.has_vertex(args.vertex):
        raise UsageError(f"unknown vertex {args.vertex!r}")
    try:
        rep = balloon_iso_check(g, args.vertex, args.maxlen, args.samples, args.seed, field)
    except GraphError as exc:
        print(f"FAIL {exc}", file=out)
        return 1
    return _report(rep, out)


def cmd_affinize(args, field, out):
    from .affinization import loop_wreath, non_nil_witness, prop3_check, radical_probe, relations_check

    if args.action == "relations":
        W = loop_wreath(ScalarAlgebra(field))
        results = relations_check(W, args.window)
        for label, ok in results:
            print(f"{label}: {'OK' if ok else 'FAIL'}", file=out)
        return 0 if all(ok for _, ok in results) else 1
    W = loop_wreath(LocalRationalAlgebra(field))
    if args.action == "prop3":
        return _report(prop3_check(W, args.degree, args.window), out)
    rep = radical_probe(args.samples, args.matrices, seed=args.seed, field=field)
    rep.merge(non_nil_witness(W, 20))
    return _report(rep, out)


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="scalar field: q (rationals) or gf<p>")
    common.add_argument("--seed", type=int, default=0, help="random seed for probes (default 0)")

    p = argparse.ArgumentParser(prog="lpa-wreath", description="Leavitt path algebras and their wreath products.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("graph", parents=[common], help="validate a graph file")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("graph")
    sp.set_defaults(run=cmd_graph)

    sp = sub.add_parser("hsat", parents=[common], help="hereditary saturated subsets")
    sp.add_argument("action", choices=["check", "closure", "enumerate"])
    sp.add_argument("graph")
    sp.add_argument("--set", default="", help="comma-separated vertices")
    sp.add_argument("--bound", type=int, default=16)
    sp.set_defaults(run=cmd_hsat)

    for name, cls, actions in (("cohn", CohnAlgebra, ["nf", "mul"]), ("lpa", LeavittAlgebra, ["nf", "mul", "graded"])):
        sp = sub.add_parser(name, parents=[common], help=f"{name} algebra arithmetic")
        sp.add_argument("action", choices=actions)
        sp.add_argument("graph")
        sp.add_argument("--expr", action="append", help="expression; repeat for mul")
        sp.add_argument("--degrees", action="store_true", help="also print the homogeneous degrees")
        sp.set_defaults(run=cmd_path_algebra(cls))

    sp = sub.add_parser("wreath", parents=[common], help="wreath product arithmetic")
    sp.add_argument("action", choices=["nf", "mul"])
    sp.add_argument("graph")
    sp.add_argument("--ext", help="extension file with idem/bridge lines")
    sp.add_argument("--expr", action="append")
    sp.set_defaults(run=cmd_wreath)

    sp = sub.add_parser("lemma", parents=[common], help="structural probes on a wreath product")
    sp.add_argument("action", choices=["probe"])
    sp.add_argument("kind", choices=["assoc", "actions", "ck", "jcapi"])
    sp.add_argument("graph")
    sp.add_argument("--ext")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--bound", type=int, default=4, help="length bound for exhaustive checks")
    sp.set_defaults(run=cmd_lemma)

    sp = sub.add_parser("prop1", parents=[common], help="finite generation witness search")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("graph", nargs="?", help="graph file (default: loop wreath over F[x])")
    sp.add_argument("--ext")
    sp.add_argument("--index-len", type=int, default=3)
    sp.add_argument("--word-len", type=int, default=2)
    sp.add_argument("--max-word", type=int, default=8)
    sp.add_argument("--witnesses", action="store_true")
    sp.set_defaults(run=cmd_prop1)

    sp = sub.add_parser("prop2", parents=[common], help="L(G) as a wreath product over W")
    sp.add_argument("action", choices=["verify"])
    sp.add_argument("graph")
    sp.add_argument("--set", required=True)
    sp.add_argument("--maxlen", type=int, default=4)
    sp.add_argument("--samples", type=int, default=300)
    sp.set_defaults(run=cmd_prop2)

    sp = sub.add_parser("balloon", parents=[common], help="balloon vertex isomorphism")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("graph")
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--maxlen", type=int, default=4)
    sp.add_argument("--samples", type=int, default=300)
    sp.set_defaults(run=cmd_balloon)

    sp = sub.add_parser("affinize", parents=[common], help="the loop wreath as Laurent + matrices")
    sp.add_argument("action", choices=["relations", "prop3", "radical"])
    sp.add_argument("--degree", type=int, default=6)
    sp.add_argument("--window", type=int, default=4)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--matrices", type=int, default=100)
    sp.set_defaults(run=cmd_affinize)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        field = field_from_name(args.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.run(args, field, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
