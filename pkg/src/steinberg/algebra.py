"""The Steinberg algebra A(G) of a graph groupoid, with exact coefficients.

An :class:`Element` is a finite sum ``sum a_U 1_U`` over basics ``U`` kept in a
canonical form: keys pairwise disjoint, no zero coefficients, and no complete
sibling family ``{Z(mu e, nu e) : r(e) = s(mu)}`` sharing one coefficient
(such a family is replaced by ``Z(mu, nu)``).  Two elements are equal as
functions on the groupoid exactly when their canonical forms coincide.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .bisections import (
    Basic,
    CylSet,
    ancestors,
    disjointify,
    expand_siblings,
    inv_basic,
    mul_basic,
    unit_cylinder,
)
from .coeffs import ONE, GaussianRational, as_coeff
from .graph import Graph
from .points import GroupoidElement

__all__ = [
    "Element",
    "normalize",
    "linear_combine",
    "indicator",
    "identity",
    "Enclosure",
    "i_norm",
]


def _canonical(g: Graph, raw: Mapping[Basic, GaussianRational]) -> dict:
    """Disjointify, redistribute coefficients, drop zeros, merge sibling families."""
    by_degree: dict = defaultdict(dict)
    for b, c in raw.items():
        if c:
            by_degree[b.degree][b] = c
    out: dict = {}
    for terms in by_degree.values():
        if len(terms) == 1:
            out.update(terms)
            continue
        for w in disjointify(g, terms):
            c = terms.get(w)
            for anc in ancestors(w):
                a = terms.get(anc)
                if a is not None:
                    c = a if c is None else c + a
            if c:
                out[w] = c
    return _merge_siblings(g, out)


def _merge_siblings(g: Graph, terms: dict) -> dict:
    pending = set(terms)
    while pending:
        parents = {}
        for b in pending:
            mu, nu = b
            if mu.edges and nu.edges and mu.edges[-1] == nu.edges[-1]:
                p = Basic(mu.prefix(len(mu.edges) - 1), nu.prefix(len(nu.edges) - 1))
                parents[p] = None
        pending = set()
        for p in parents:
            kids = expand_siblings(g, p)
            c = terms.get(kids[0])
            if c is None or any(terms.get(k) != c for k in kids[1:]):
                continue
            for k in kids:
                del terms[k]
            terms[p] = c
            pending.add(p)
    return terms


class Element:
    """An element of A(G) in canonical form.  Treat as immutable."""

    __slots__ = ("graph", "terms", "_hash")

    def __init__(self, graph: Graph, terms: Mapping[Basic, GaussianRational] = (), *, _canonical_input=False):
        self.graph = graph
        if _canonical_input:
            self.terms = dict(terms)
        else:
            raw: dict = {}
            items = terms.items() if isinstance(terms, Mapping) else terms
            for b, c in items:
                c = as_coeff(c)
                raw[b] = raw[b] + c if b in raw else c
            self.terms = _canonical(graph, raw)
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, graph: Graph) -> "Element":
        return cls(graph, {}, _canonical_input=True)

    # basic protocol -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list:
        """Terms sorted by (degree, mu, nu)."""
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __repr__(self) -> str:
        return f"Element({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}){b}" for b, c in self.items())

    # linear structure -----------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        return linear_combine(ONE, self, ONE, other)

    def __sub__(self, other: "Element") -> "Element":
        return linear_combine(ONE, self, -ONE, other)

    def __neg__(self) -> "Element":
        return Element(self.graph, {b: -c for b, c in self.terms.items()}, _canonical_input=True)

    def scale(self, c) -> "Element":
        c = as_coeff(c)
        if not c:
            return Element.zero(self.graph)
        return Element(self.graph, {b: c * a for b, a in self.terms.items()}, _canonical_input=True)

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    # algebra structure ----------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        return mul(self, other)

    def star(self) -> "Element":
        return star(self)

    def component(self, n: int) -> "Element":
        return homogeneous_component(self, n)

    def degrees(self) -> list:
        return sorted({b.degree for b in self.terms})

    def max_depth(self) -> int:
        return max((b.depth for b in self.terms), default=0)

    def __call__(self, gamma: GroupoidElement) -> GaussianRational:
        return evaluate(self, gamma)

    def support(self) -> CylSet:
        return support(self)


def normalize(graph: Graph, terms: Iterable[tuple] | Mapping) -> Element:
    """Canonical form of ``sum c * 1_U`` over (basic, coefficient) pairs."""
    return Element(graph, terms)


def indicator(graph: Graph, basics: Iterable[Basic], c=ONE) -> Element:
    """``c * 1_S`` for a finite disjoint union ``S`` of basics."""
    return Element(graph, [(b, c) for b in basics])


def identity(graph: Graph) -> Element:
    """``sum_v 1_{Z(v)}``, the unit of A(G) for a finite graph."""
    return Element(graph, [(unit_cylinder(graph.vertex(v)), ONE) for v in graph.vertices])


def linear_combine(c1, f: Element, c2, g: Element) -> Element:
    c1, c2 = as_coeff(c1), as_coeff(c2)
    raw: dict = {}
    for b, a in f.terms.items():
        raw[b] = c1 * a
    for b, a in g.terms.items():
        raw[b] = raw[b] + c2 * a if b in raw else c2 * a
    return Element(f.graph, raw, _canonical_input=False)


def mul(f: Element, g: Element) -> Element:
    """Convolution, computed from ``1_U 1_V = 1_{UV}`` on basics."""
    raw: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            p = mul_basic(a, b)
            if p is not None:
                c = ca * cb
                raw[p] = raw[p] + c if p in raw else c
    return Element(f.graph, raw)


def star(f: Element) -> Element:
    """``(sum a 1_{Z(mu,nu)})* = sum conj(a) 1_{Z(nu,mu)}``."""
    return Element(f.graph, {inv_basic(b): c.conjugate() for b, c in f.terms.items()}, _canonical_input=True)


def homogeneous_component(f: Element, n: int) -> Element:
    return Element(f.graph, {b: c for b, c in f.terms.items() if b.degree == n}, _canonical_input=True)


def evaluate(f: Element, gamma: GroupoidElement) -> GaussianRational:
    """``f(gamma)``; at most one key contains ``gamma``."""
    longest = max((len(b.mu.edges) for b in f.terms), default=-1)
    n = gamma.n
    x, y = gamma.x, gamma.y
    for j in range(max(gamma.k, n, 0), longest + 1):
        c = f.terms.get(Basic(x.prefix(j), y.prefix(j - n)))
        if c is not None:
            return c
    return GaussianRational(0)


def support(f: Element) -> CylSet:
    return CylSet.raw(f.terms)


# I-norm -----------------------------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    """A closed rational interval ``[lo, hi]`` known to contain a real number."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def _sqrt_enclosure(q: Fraction, bits: int) -> tuple:
    """Exact sqrt when ``q`` is a rational square, else an interval of width 2**-bits."""
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp == p and rd * rd == d:
        r = Fraction(rp, rd)
        return r, r
    scale = 1 << bits
    # floor(sqrt(p/d) * 2**bits) = isqrt(p * 4**bits // d) up to the floor of the quotient
    lo_num = math.isqrt((p << (2 * bits)) // d)
    return Fraction(lo_num, scale), Fraction(lo_num + 1, scale)


def _fiber_sums(paths_coeffs: list) -> list:
    """For each path, the sum of |coefficients| over keys whose path is a prefix of it."""
    sums = []
    for p, _ in paths_coeffs:
        lo = hi = Fraction(0)
        for q, (clo, chi) in paths_coeffs:
            if q.verts[0] == p.verts[0] and p.edges[: len(q.edges)] == q.edges and len(q.edges) <= len(p.edges):
                lo += clo
                hi += chi
        sums.append((lo, hi))
    return sums


def i_norm(f: Element, bits: int = 40):
    """``max(sup_u sum_{r(a)=u} |f(a)|, sup_u sum_{s(a)=u} |f(a)|)``.

    Returns a Fraction when every ``|coefficient|`` is rational, otherwise an
    :class:`Enclosure` of width at most ``2**-bits``.
    """
    if not f.terms:
        return Fraction(0)
    items = list(f.terms.items())
    m = len(items)
    # per-term width 2**-(bits + extra) keeps the width of any m-term sum below 2**-bits
    extra = max(1, (m - 1).bit_length() + 1)
    absvals = [_sqrt_enclosure(c.norm(), bits + extra) for _, c in items]
    exact = all(lo == hi for lo, hi in absvals)
    best_lo = best_hi = Fraction(0)
    for side in ("mu", "nu"):
        pcs = [(getattr(b, side), a) for (b, _), a in zip(items, absvals)]
        for lo, hi in _fiber_sums(pcs):
            best_lo = max(best_lo, lo)
            best_hi = max(best_hi, hi)
    if exact:
        return best_lo
    return Enclosure(best_lo, best_hi)
