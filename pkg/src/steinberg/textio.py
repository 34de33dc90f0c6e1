"""Parsers and canonical printers for every text format the CLI reads or writes.

Printers are the ``str`` of the corresponding objects; each parser here
accepts exactly what the printer emits (and a little more whitespace).
"""

from __future__ import annotations

import re
from typing import Iterator

from .algebra import Element
from .bisections import Basic, CylSet
from .coeffs import ONE, GaussianRational, parse_coeff
from .deaconu_renault import DrBasic, Sft, dr_validate
from .errors import NotComposable, ParseError, UnknownEdge
from .graph import Graph, Path, format_graph, parse_graph
from .lpa import LpaExpr, Symbol
from .points import (
    FibonacciRouting,
    GroupoidElement,
    Point,
    _canonical_aperiodic,
    canonical_point,
    groupoid_element,
)
from .representations import GeneratorAssignment
from .uniqueness import Certificate

__all__ = [
    "parse_graph",
    "format_graph",
    "parse_path",
    "parse_element",
    "print_canonical",
    "parse_point",
    "parse_groupoid_element",
    "parse_lpa",
    "parse_cylset",
    "parse_representation",
    "format_representation",
    "parse_sft",
    "format_sft",
    "parse_drbasic",
    "format_certificate",
    "parse_certificate",
]


def _where(text: str, pos: int) -> tuple:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def parse_path(g: Graph, text: str) -> Path:
    """``a.b.c`` or a lone vertex name."""
    text = text.strip()
    if g.has_vertex(text):
        return g.vertex(text)
    parts = text.split(".")
    for e in parts:
        if not g.has_edge(e):
            raise UnknownEdge(f"unknown edge or vertex {e!r}")
    return g.path(parts)


# algebra elements -------------------------------------------------------

_TERM_RE = re.compile(r"\s*(?:\((?P<coeff>[^()]*)\))?\s*\[(?P<mu>[^|\]]*)\|(?P<nu>[^\]]*)\]")


def _iter_terms(text: str) -> Iterator[tuple]:
    """Yield ``(sign, coeff_text or None, mu, nu, coeff_pos)`` for ``expr``."""
    pos = 0
    n = len(text)
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if first:
                raise ParseError("empty expression", *_where(text, pos))
            return
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' but found {text[pos]!r}", *_where(text, pos))
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ParseError("expected a term like (c)[mu|nu]", *_where(text, pos))
        yield sign, m["coeff"], m["mu"], m["nu"], m.start("coeff") if m["coeff"] is not None else pos
        pos = m.end()
        first = False


def parse_element(text: str, g: Graph) -> Element:
    """Parse ``(c)[mu|nu] + (c)[mu|nu] - ...`` and normalize.  ``0`` is the zero element."""
    if text.strip() == "0":
        return Element.zero(g)
    raw = []
    for sign, ctext, mu, nu, cpos in _iter_terms(text):
        c = ONE if ctext is None else parse_coeff(ctext, *_where(text, cpos))
        mu_p, nu_p = parse_path(g, mu), parse_path(g, nu)
        if mu_p.s != nu_p.s:
            raise NotComposable(f"[{mu}|{nu}]: paths have different sources")
        raw.append((Basic(mu_p, nu_p), c if sign > 0 else -c))
    return Element(g, raw)


def print_canonical(f: Element) -> str:
    return str(f)


def parse_cylset(text: str, g: Graph) -> CylSet:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"expected {{...}} but got {text!r}")
    inner = text[1:-1].strip()
    members = []
    for m in re.finditer(r"\[([^|\]]*)\|([^\]]*)\]", inner):
        members.append(Basic(parse_path(g, m[1]), parse_path(g, m[2])))
    if re.sub(r"\[[^\]]*\]|,|\s", "", inner):
        raise ParseError(f"bad cylinder set {text!r}")
    return CylSet(g, members)


# points ---------------------------------------------------------------------

_FIB_RE = re.compile(r"^fib\((?P<c1>[^,()]+),(?P<c2>[^,()]+)\)(?:\+(?P<off>\d+))?$")


def parse_point(text: str, g: Graph) -> Point:
    """``head~cycle`` (eventually periodic) or ``head~fib(c1,c2)+offset``."""
    if "~" not in text:
        raise ParseError(f"expected head~cycle in {text!r}")
    head_t, tail_t = (s.strip() for s in text.split("~", 1))
    head = parse_path(g, head_t)
    m = _FIB_RE.match(tail_t)
    if m:
        c1, c2 = parse_path(g, m["c1"]), parse_path(g, m["c2"])
        stream = FibonacciRouting(c1.r, c1, c2)
        return _canonical_aperiodic(head, stream, int(m["off"] or 0))
    return canonical_point(head, parse_path(g, tail_t))


def parse_groupoid_element(text: str, g: Graph) -> GroupoidElement:
    """``x;n;y``."""
    parts = text.split(";")
    if len(parts) != 3:
        raise ParseError(f"expected x;n;y in {text!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad degree {parts[1]!r}") from None
    return groupoid_element(parse_point(parts[0], g), n, parse_point(parts[2], g))


# Leavitt path algebra words ---------------------------------------------------

_SYM_RE = re.compile(r"(?P<kind>p|s)_(?P<name>[A-Za-z0-9_]+?)(?P<star>\^\*)?(?=\s|$|[+\-])")


def parse_lpa(text: str) -> LpaExpr:
    """``(c)s_a s_b^* + p_v - ...``; a missing coefficient means 1."""
    terms = []
    pos, n = 0, len(text)
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' but found {text[pos]!r}", *_where(text, pos))
        while pos < n and text[pos].isspace():
            pos += 1
        c = ONE
        if pos < n and text[pos] == "(":
            end = text.find(")", pos)
            if end < 0:
                raise ParseError("unclosed '('", *_where(text, pos))
            c = parse_coeff(text[pos + 1 : end], *_where(text, pos + 1))
            pos = end + 1
        word = []
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            m = _SYM_RE.match(text, pos)
            if not m:
                break
            word.append(Symbol({"p": "p", "s": "s*" if m["star"] else "s"}[m["kind"]], m["name"]))
            if m["kind"] == "p" and m["star"]:
                raise ParseError("p_v has no adjoint form", *_where(text, pos))
            pos = m.end()
        if not word:
            if text[pos:].strip() == "0" and first:
                return LpaExpr()
            raise ParseError("expected p_v, s_e or s_e^*", *_where(text, pos))
        terms.append((c if sign > 0 else -c, tuple(word)))
        first = False
    if not terms:
        raise ParseError("empty expression", 1, 1)
    return LpaExpr(terms)


# representations --------------------------------------------------------------


def parse_representation(text: str, g: Graph) -> GeneratorAssignment:
    """``dim n`` then ``p|s|sstar <name> <n*n entries>`` lines; optional ``mode trivial``."""
    dim = None
    mode = "canonical"
    tables: dict = {"p": {}, "s": {}, "sstar": {}}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "dim" and len(parts) == 2 and parts[1].isdigit():
            dim = int(parts[1])
        elif parts[0] == "mode" and len(parts) == 2:
            mode = parts[1]
        elif parts[0] in tables and len(parts) >= 3:
            if dim is None:
                raise ParseError("'dim' must come first", lineno, 1)
            col = raw.find(parts[2]) + 1
            tables[parts[0]][parts[1]] = [parse_coeff(x, lineno, col) for x in parts[2:]]
        else:
            raise ParseError(f"cannot parse representation line {raw!r}", lineno, 1)
    if dim is None:
        raise ParseError("missing 'dim' line", 1, 1)
    return GeneratorAssignment(g, dim, tables["p"], tables["s"], tables["sstar"], mode=mode)


def format_representation(a: GeneratorAssignment) -> str:
    lines = [f"dim {a.dim}"]
    if a.mode != "canonical":
        lines.append(f"mode {a.mode}")
    for kind, table in (("p", a.p), ("s", a.s), ("sstar", a.sstar)):
        for name, m in table.items():
            lines.append(f"{kind} {name} " + " ".join(str(x) for x in m.flat))
    return "\n".join(lines) + "\n"


# shifts --------------------------------------------------------------------------


def parse_sft(text: str) -> Sft:
    alphabet = None
    allowed = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "alphabet" and len(parts) >= 2:
            alphabet = tuple(parts[1:])
        elif parts[0] == "allow" and len(parts) == 3:
            allowed.add((parts[1], parts[2]))
        else:
            raise ParseError(f"cannot parse shift line {raw!r}", lineno, 1)
    if alphabet is None:
        raise ParseError("missing 'alphabet' line", 1, 1)
    try:
        return Sft(alphabet, frozenset(allowed))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def format_sft(sft: Sft) -> str:
    lines = ["alphabet " + " ".join(sft.alphabet)]
    lines += [f"allow {x} {y}" for x, y in sorted(sft.allowed)]
    return "\n".join(lines) + "\n"


_DR_RE = re.compile(r"^Z\((?P<U>[^;]*);(?P<V>[^;]*);(?P<k>\d+);(?P<l>\d+)\)$")


def parse_drbasic(text: str, sft: Sft) -> DrBasic:
    """``Z(u1,u2;v1;k;l)`` with words written as ``.``-separated letters."""
    m = _DR_RE.match(text.strip())
    if not m:
        raise ParseError(f"expected Z(U;V;k;l) but got {text!r}")

    def words(s):
        out = []
        for w in s.split(","):
            letters = tuple(x for x in w.strip().split(".") if x)
            for x in letters:
                if x not in sft.alphabet:
                    raise ParseError(f"unknown letter {x!r}")
            out.append(letters)
        return out

    return dr_validate(sft, words(m["U"]), words(m["V"]), int(m["k"]), int(m["l"]))


# certificates ----------------------------------------------------------------


def format_certificate(cert: Certificate) -> str:
    lines = []
    if cert.graded:
        lines.append(f"grade {cert.grade}")
    lines += [f"X0 {cert.X0}", f"Y0 {cert.Y0}", f"B {cert.B}", f"c {cert.c}", f"K {cert.K}"]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, g: Graph) -> Certificate:
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key in fields or key not in ("grade", "X0", "Y0", "B", "c", "K"):
            raise ParseError(f"unexpected certificate line {raw!r}", lineno, 1)
        fields[key] = (rest.strip(), lineno)
    for key in ("X0", "Y0", "B", "c", "K"):
        if key not in fields:
            raise ParseError(f"certificate lacks {key}", 1, 1)
    grade = None
    if "grade" in fields:
        try:
            grade = int(fields["grade"][0])
        except ValueError:
            raise ParseError("bad grade", fields["grade"][1], 7) from None
    c: GaussianRational = parse_coeff(fields["c"][0], fields["c"][1], 3)
    return Certificate(
        parse_cylset(fields["X0"][0], g),
        parse_cylset(fields["Y0"][0], g),
        parse_cylset(fields["B"][0], g),
        c,
        parse_cylset(fields["K"][0], g),
        grade=grade,
    )
