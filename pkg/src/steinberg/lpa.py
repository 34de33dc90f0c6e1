"""Leavitt path algebra words, their reduction, and the isomorphism with A(G).

Generators are ``p_v``, ``s_e`` and ``s_e^*``.  Reduction uses only the
Leavitt/Cuntz-Krieger relations::

    p_v p_w = [v == w] p_v        s_e^* s_f = [e == f] p_{s(e)}
    p_{r(e)} s_e = s_e = s_e p_{s(e)}    sum_{r(e) = v} s_e s_e^* = p_v

and never touches the groupoid calculus, so comparing it with ``phi`` is a
genuine cross-check.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, NamedTuple, Optional

from .algebra import Element, mul
from .bisections import Basic
from .coeffs import ONE, GaussianRational, as_coeff
from .errors import UnknownSymbol
from .graph import Graph, Path, compose_paths

__all__ = [
    "Symbol",
    "LpaExpr",
    "LpaNormal",
    "monomial",
    "reduce_lpa",
    "phi",
    "phi_inverse",
]


class Symbol(NamedTuple):
    kind: str  # "p", "s" or "s*"
    name: str

    def __str__(self) -> str:
        if self.kind == "p":
            return f"p_{self.name}"
        if self.kind == "s":
            return f"s_{self.name}"
        return f"s_{self.name}^*"


class LpaExpr:
    """A formal linear combination of words in the generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        self.terms = tuple((as_coeff(c), tuple(Symbol(*s) for s in w)) for c, w in terms)

    @classmethod
    def word(cls, *symbols, coeff=ONE) -> "LpaExpr":
        return cls([(coeff, symbols)])

    def __add__(self, other: "LpaExpr") -> "LpaExpr":
        return LpaExpr(self.terms + other.terms)

    def __sub__(self, other: "LpaExpr") -> "LpaExpr":
        return LpaExpr(self.terms + tuple((-c, w) for c, w in other.terms))

    def __mul__(self, other):
        if isinstance(other, LpaExpr):
            return LpaExpr((c * d, w + v) for c, w in self.terms for d, v in other.terms)
        c = as_coeff(other)
        return LpaExpr((c * d, w) for d, w in self.terms)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})" + " ".join(str(s) for s in w) for c, w in self.terms)


def monomial(mu: Path, nu: Path) -> LpaExpr:
    """The word ``s_mu s_nu^*`` (``p_v`` when both paths are the vertex v)."""
    if not mu.edges and not nu.edges:
        return LpaExpr.word(Symbol("p", mu.verts[0]))
    syms = [Symbol("s", e) for e in mu.edges]
    syms += [Symbol("s*", e) for e in reversed(nu.edges)]
    return LpaExpr.word(*syms)


def _check(g: Graph, sym: Symbol) -> None:
    ok = g.has_vertex(sym.name) if sym.kind == "p" else (sym.kind in ("s", "s*") and g.has_edge(sym.name))
    if not ok:
        raise UnknownSymbol(str(sym))


def _reduce_word(g: Graph, word: tuple) -> Optional[tuple]:
    """Reduce a word to ``(mu, nu)`` meaning ``s_mu s_nu^*``, or None for zero."""
    state: Optional[tuple] = None
    for sym in word:
        _check(g, sym)
        if state is None:
            if sym.kind == "p":
                v = g.vertex(sym.name)
                state = (v, v)
            elif sym.kind == "s":
                state = (g.path((sym.name,)), g.vertex(g.s(sym.name)))
            else:
                state = (g.vertex(g.s(sym.name)), g.path((sym.name,)))
            continue
        mu, nu = state
        if sym.kind == "p":
            # s_nu^* p_w survives iff p_w s_nu = s_nu, i.e. r(nu) = w
            if nu.verts[0] != sym.name:
                return None
        elif sym.kind == "s":
            e = sym.name
            if not nu.edges:
                if g.r(e) != nu.verts[0]:
                    return None
                ext = g.path((e,))
                state = (compose_paths(mu, ext), g.vertex(g.s(e)))
            else:
                # innermost pair s_{nu_1}^* s_e
                if nu.edges[0] != e:
                    return None
                state = (mu, nu.suffix(1))
        else:
            e = sym.name
            if g.s(e) != nu.verts[0]:
                return None
            state = (mu, compose_paths(g.path((e,)), nu))
    return state


def _extends(short: tuple, long: tuple) -> bool:
    """``long == (mu kappa, nu kappa)`` for ``short == (mu, nu)`` and some kappa."""
    (m1, n1), (m2, n2) = short, long
    k = len(m2.edges) - len(m1.edges)
    if k <= 0 or len(n2.edges) - len(n1.edges) != k:
        return False
    if m2.verts[0] != m1.verts[0] or n2.verts[0] != n1.verts[0]:
        return False
    if m2.edges[: len(m1.edges)] != m1.edges or n2.edges[: len(n1.edges)] != n1.edges:
        return False
    return m2.edges[len(m1.edges) :] == n2.edges[len(n1.edges) :]


def _ck2_expand(g: Graph, pair: tuple) -> list:
    mu, nu = pair
    out = []
    for e in g.incoming(mu.verts[-1]):
        ep = g.path((e,))
        out.append((compose_paths(mu, ep), compose_paths(nu, ep)))
    return out


def _canonical(g: Graph, terms: dict) -> dict:
    """Canonical spanning form: no overlapping pairs, no contractible families."""
    terms = {k: c for k, c in terms.items() if c}
    changed = True
    while changed:
        changed = False
        keys = list(terms)
        for short in keys:
            if short not in terms:
                continue
            if any(_extends(short, other) for other in keys if other in terms and other != short):
                c = terms.pop(short)
                for k in _ck2_expand(g, short):
                    terms[k] = terms.get(k, 0) + c
                changed = True
        if changed:
            terms = {k: c for k, c in terms.items() if c}
            continue
        # contract sum_e c s_{mu e} s_{nu e}^* -> c s_mu s_nu^*
        for k in list(terms):
            if k not in terms:
                continue
            mu, nu = k
            if not (mu.edges and nu.edges and mu.edges[-1] == nu.edges[-1]):
                continue
            par = (mu.prefix(len(mu.edges) - 1), nu.prefix(len(nu.edges) - 1))
            family = _ck2_expand(g, par)
            c = terms[k]
            if all(terms.get(m) == c for m in family):
                for m in family:
                    del terms[m]
                terms[par] = c
                changed = True
    return terms


class LpaNormal:
    """``sum a s_mu s_nu^*`` in canonical form, keyed by ``(mu, nu)``."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph: Graph, terms: dict):
        self.graph = graph
        self.terms = terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LpaNormal):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> list:
        def key(t):
            mu, nu = t[0]
            return (len(mu.edges) - len(nu.edges), mu.edges, mu.verts, nu.edges, nu.verts)

        return sorted(self.terms.items(), key=key)

    def to_expr(self) -> LpaExpr:
        out = LpaExpr()
        for (mu, nu), c in self.items():
            out = out + monomial(mu, nu) * c
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (mu, nu), c in self.items():
            (_, word), = monomial(mu, nu).terms
            parts.append(f"({c})" + " ".join(str(s) for s in word))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LpaNormal({self})"


def reduce_lpa(g: Graph, x: LpaExpr) -> LpaNormal:
    """Rewrite to canonical ``sum a s_mu s_nu^*`` form using the CK relations."""
    acc: dict = defaultdict(lambda: GaussianRational(0))
    for c, word in x.terms:
        if not word:
            raise UnknownSymbol("empty word (the algebra need not be unital)")
        pair = _reduce_word(g, word)
        if pair is not None and c:
            acc[pair] = acc[pair] + c
    return LpaNormal(g, _canonical(g, dict(acc)))


def _generator_image(g: Graph, sym: Symbol) -> Element:
    _check(g, sym)
    if sym.kind == "p":
        v = g.vertex(sym.name)
        return Element(g, {Basic(v, v): ONE})
    e = g.path((sym.name,))
    w = g.vertex(g.s(sym.name))
    b = Basic(e, w) if sym.kind == "s" else Basic(w, e)
    return Element(g, {b: ONE})


def phi(g: Graph, x: LpaExpr) -> Element:
    """The homomorphism ``s_mu s_nu^* -> 1_{Z(mu, nu)}``, ``p_v -> 1_{Z(v)}``."""
    total = Element.zero(g)
    for c, word in x.terms:
        if not word:
            raise UnknownSymbol("empty word")
        prod = _generator_image(g, word[0])
        for sym in word[1:]:
            prod = mul(prod, _generator_image(g, sym))
            if not prod:
                break
        total = total + prod.scale(c)
    return total


def phi_inverse(f: Element) -> LpaNormal:
    """Transcribe canonical keys ``Z(mu, nu)`` as ``s_mu s_nu^*``."""
    return LpaNormal(f.graph, {(b.mu, b.nu): c for b, c in f.terms.items()})
