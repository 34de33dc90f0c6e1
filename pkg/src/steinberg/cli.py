"""Command-line front end.

Exit status: 0 on success, 1 on a domain error, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import textio
from .algebra import i_norm
from .deaconu_renault import dr_mul, dr_to_graph
from .errors import ParseError, SteinbergError
from .graph import Graph
from .lpa import phi, reduce_lpa
from .points import fibonacci_point
from .representations import check_axioms, extend_pi
from .uniqueness import (
    ck_certificate,
    condition_L,
    graded_certificate,
    trivial_isotropy_witness,
    verify_certificate,
)


class _ArgParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgParseError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SteinbergError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args) -> Graph:
    if not args.graph:
        raise SteinbergError("this command needs -g <graphfile>")
    return textio.parse_graph(_read(args.graph))


def _elements(args, g: Graph) -> list:
    return [textio.parse_element(t, g) for t in args.elements]


def _format_matrix(m) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m)


def _seed(args, g: Graph):
    if args.seed:
        return textio.parse_point(args.seed, g)
    if args.seed_cycles:
        parts = args.seed_cycles.split(",")
        if len(parts) != 2:
            raise ParseError("--seed-cycles expects two comma-separated cycles")
        return fibonacci_point(g, textio.parse_path(g, parts[0]), textio.parse_path(g, parts[1]))
    seed = trivial_isotropy_witness(g, g.vertex(g.vertices[0]))
    if seed is None:
        raise SteinbergError("no aperiodic seed found; pass --seed-cycles")
    return seed


def cmd_mul(args) -> str:
    g = _graph(args)
    fs = _elements(args, g)
    out = fs[0]
    for f in fs[1:]:
        out = out * f
    return str(out)


def cmd_star(args) -> str:
    g = _graph(args)
    return str(textio.parse_element(args.element, g).star())


def cmd_nf(args) -> str:
    g = _graph(args)
    return str(textio.parse_element(args.element, g))


def cmd_eval(args) -> str:
    g = _graph(args)
    f = textio.parse_element(args.element, g)
    return str(f(textio.parse_groupoid_element(args.gamma, g)))


def cmd_inorm(args) -> str:
    g = _graph(args)
    return str(i_norm(textio.parse_element(args.element, g), bits=args.precision))


def cmd_component(args) -> str:
    g = _graph(args)
    return str(textio.parse_element(args.element, g).component(args.degree))


def cmd_lpa_reduce(args) -> str:
    g = _graph(args)
    return str(reduce_lpa(g, textio.parse_lpa(args.expr)))


def cmd_phi(args) -> str:
    g = _graph(args)
    return str(phi(g, textio.parse_lpa(args.expr)))


def cmd_check_rep(args) -> str:
    g = _graph(args)
    a = textio.parse_representation(_read(args.rep), g)
    return str(check_axioms(a, args.depth))


def cmd_pi(args) -> str:
    g = _graph(args)
    a = textio.parse_representation(_read(args.rep), g)
    f = textio.parse_element(args.element, g)
    report = check_axioms(a, max(args.depth, f.max_depth(), 1))
    return _format_matrix(extend_pi(a, f, report))


def cmd_cert_graded(args) -> str:
    g = _graph(args)
    return textio.format_certificate(graded_certificate(textio.parse_element(args.element, g))).rstrip("\n")


def cmd_cert_ck(args) -> str:
    g = _graph(args)
    f = textio.parse_element(args.element, g)
    cert = ck_certificate(f, _seed(args, g), args.depth)
    return textio.format_certificate(cert).rstrip("\n")


def cmd_verify(args) -> str:
    g = _graph(args)
    cert = textio.parse_certificate(_read(args.cert), g)
    ok = verify_certificate(cert, textio.parse_element(args.element, g))
    return "true" if ok else "false"


def cmd_dr_mul(args) -> str:
    sft = textio.parse_sft(_read(args.sft))
    A = textio.parse_drbasic(args.left, sft)
    B = textio.parse_drbasic(args.right, sft)
    prods = dr_mul(A, B)
    return " + ".join(str(d) for d in prods) if prods else "0"


def cmd_dr_translate(args) -> str:
    g = _graph(args)
    sft = textio.parse_sft(_read(args.sft))
    return str(dr_to_graph(textio.parse_drbasic(args.basic, sft), g))


def cmd_cond_l(args) -> str:
    return "true" if condition_L(_graph(args)) else "false"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-g", "--graph", help="graph file (lines 'v <name>' and 'e <name> <range> <source>')")
    common.add_argument("--depth", type=int, default=8, help="search or verification depth")
    common.add_argument("--seed-cycles", help="two cycles c1,c2 at one vertex for the aperiodic seed")
    common.add_argument("--seed", help="seed point, head~cycle or head~fib(c1,c2)+offset")
    common.add_argument("--precision", type=int, default=40, help="enclosure width is at most 2^-bits")

    p = _Parser(prog="steinberg", description="Exact computation in Steinberg algebras of graph groupoids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, *positionals):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for pos in positionals:
            if isinstance(pos, tuple):
                sp.add_argument(pos[0], **pos[1])
            else:
                sp.add_argument(pos)
        sp.set_defaults(func=fn)

    add("mul", cmd_mul, "product of elements", ("elements", {"nargs": "+"}))
    add("star", cmd_star, "involution", "element")
    add("nf", cmd_nf, "canonical normal form", "element")
    add("eval", cmd_eval, "value at a groupoid element x;n;y", "element", "gamma")
    add("inorm", cmd_inorm, "I-norm", "element")
    add("component", cmd_component, "homogeneous component", "element", ("degree", {"type": int}))
    add("lpa-reduce", cmd_lpa_reduce, "reduce a Leavitt path algebra expression", "expr")
    add("phi", cmd_phi, "map a Leavitt path algebra expression into A(G)", "expr")
    add("check-rep", cmd_check_rep, "check R1-R3 to --depth", "rep")
    add("pi", cmd_pi, "extend a representation to an element", "rep", "element")
    add("cert-graded", cmd_cert_graded, "graded uniqueness certificate", "element")
    add("cert-ck", cmd_cert_ck, "Cuntz-Krieger uniqueness certificate", "element")
    add("verify", cmd_verify, "verify a certificate file against an element", "cert", "element")
    add("dr-mul", cmd_dr_mul, "product of shift-groupoid basic sets", ("--sft", {"required": True}), "left", "right")
    add("dr-translate", cmd_dr_translate, "translate a basic set to the graph model", ("--sft", {"required": True}), "basic")
    add("cond-l", cmd_cond_l, "does every cycle have an entrance")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except _ArgParseError as exc:
        print(str(exc), file=err)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except SteinbergError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    print(text, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
