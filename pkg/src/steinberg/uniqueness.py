"""Isotropy, Condition (L), and certificates that ``1_K`` lies in an ideal.

A certificate records windows ``X0``, ``Y0`` in the unit space, a bisection
``B`` and a scalar ``c`` such that ``1_{X0} h 1_{Y0} = c 1_B`` where ``h`` is
the element (graded case: one homogeneous component of it), together with a
unit-space set ``K`` satisfying ``(c 1_B)^* (c 1_B) = |c|^2 1_K``.  Any
homomorphism killing ``h`` therefore kills ``1_K``.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import Element, indicator, mul
from .bisections import Basic, CylSet, is_bisection, unit_cylinder
from .coeffs import GaussianRational, as_coeff
from .errors import Exhausted, ZeroElement
from .graph import Graph, Path, compose_paths, vertex_path
from .points import (
    AperiodicPoint,
    EvPerPoint,
    Point,
    canonical_point,
    fibonacci_point,
)

__all__ = [
    "IsotropyReport",
    "isotropy_group",
    "condition_L",
    "first_return_cycles",
    "trivial_isotropy_witness",
    "cylinder_witness_check",
    "point_in_cylinder",
    "Certificate",
    "choose_grade",
    "graded_certificate",
    "ck_certificate",
    "verify_certificate",
    "positivity_bound",
]


@dataclass(frozen=True)
class IsotropyReport:
    point: Point
    generator: int  # uGu = generator * Z; 0 means trivial


def isotropy_group(u: Point, degree_zero: bool = False) -> IsotropyReport:
    """Generator of the isotropy of ``u`` as a subgroup of Z.

    ``degree_zero`` restricts to the degree-0 subgroupoid, which is
    principal, so the answer there is always 0.
    """
    if degree_zero or isinstance(u, AperiodicPoint):
        return IsotropyReport(u, 0)
    return IsotropyReport(u, u.period)


def condition_L(g: Graph) -> bool:
    """Every cycle has an entrance.

    A cycle without entrance consists of vertices receiving exactly one
    edge, so it is a cycle of the partial map ``v -> s(unique edge into v)``.
    """
    step = {v: g.s(g.incoming(v)[0]) for v in g.vertices if g.in_degree(v) == 1}
    state: dict = {}
    for start in step:
        trail = []
        v = start
        while v in step and v not in state:
            state[v] = start
            trail.append(v)
            v = step[v]
        if v in step and state.get(v) == start:
            return False
    return True


def first_return_cycles(g: Graph, w: str, max_length: int) -> list:
    """Cycles at ``w`` that visit ``w`` only at their ends, up to ``max_length``."""
    out = []
    frontier = [vertex_path(w)]
    for _ in range(max_length):
        nxt = []
        for p in frontier:
            for e in g.incoming(p.s):
                q = g.extend(p, e)
                (out if q.s == w else nxt).append(q)
        frontier = nxt
    return out


def _rich_vertices(g: Graph) -> dict:
    """Vertices with two distinct first-return cycles, mapped to such a pair."""
    n = len(g.vertices)
    rich = {}
    for w in g.vertices:
        cyc = first_return_cycles(g, w, n)
        if len(cyc) >= 2:
            rich[w] = (cyc[0], cyc[1])
    return rich


def _bridge(g: Graph, start: str, targets) -> Optional[Path]:
    """Shortest path with range ``start`` and source in ``targets``."""
    seen = {start}
    queue = deque([vertex_path(start)])
    while queue:
        p = queue.popleft()
        if p.s in targets:
            return p
        for e in g.incoming(p.s):
            w = g.s(e)
            if w not in seen:
                seen.add(w)
                queue.append(g.extend(p, e))
    return None


def trivial_isotropy_witness(g: Graph, mu: Path, _rich: Optional[dict] = None) -> Optional[AperiodicPoint]:
    """An aperiodic point in ``Z(mu)``, or None when every point there is periodic."""
    rich = _rich_vertices(g) if _rich is None else _rich
    br = _bridge(g, mu.s, rich)
    if br is None:
        return None
    first, second = rich[br.s]
    return fibonacci_point(g, first, second).prepend(compose_paths(mu, br))


def cylinder_witness_check(g: Graph, depth: int) -> bool:
    """Whether every cylinder ``Z(mu)`` with ``|mu| <= depth`` holds an aperiodic point."""
    rich = _rich_vertices(g)
    return all(trivial_isotropy_witness(g, mu, rich) is not None for mu in g.paths_upto(depth))


def point_in_cylinder(g: Graph, mu: Path) -> EvPerPoint:
    """An eventually periodic point with prefix ``mu`` (follow first incoming edges)."""
    p = mu
    seen = {p.s: len(p.edges)}
    while True:
        p = g.extend(p, g.incoming(p.s)[0])
        if p.s in seen:
            i = seen[p.s]
            return canonical_point(p.prefix(i), p.suffix(i))
        seen[p.s] = len(p.edges)


# certificates -------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    X0: CylSet
    Y0: CylSet
    B: CylSet
    c: GaussianRational
    K: CylSet
    grade: Optional[int] = None

    @property
    def graded(self) -> bool:
        return self.grade is not None


def choose_grade(f: Element) -> int:
    """Nonzero degree of smallest absolute value, ties toward positive."""
    degs = f.degrees()
    if not degs:
        raise ZeroElement("the element is zero")
    return min(degs, key=lambda k: (abs(k), -k))


def _first_edge_path(g: Graph, v: str, length: int) -> Path:
    p = vertex_path(v)
    for _ in range(length):
        p = g.extend(p, g.incoming(p.s)[0])
    return p


def _window(g: Graph, X0: CylSet, h: Element, Y0: CylSet) -> Element:
    return mul(mul(indicator(g, X0), h), indicator(g, Y0))


def _constant_bisection(w: Element) -> Optional[tuple]:
    """``(c, B)`` when ``w = c 1_B`` with ``B`` a bisection."""
    if not w.terms:
        return None
    coeffs = set(w.terms.values())
    if len(coeffs) != 1:
        return None
    B = CylSet.raw(w.terms)
    if not is_bisection(B):
        return None
    return next(iter(coeffs)), B


def _star_identity(g: Graph, c: GaussianRational, B: CylSet, K: CylSet) -> bool:
    cb = indicator(g, B, c)
    return mul(cb.star(), cb) == indicator(g, K, c.norm())


def graded_certificate(f: Element) -> Certificate:
    """Certificate for a nonzero element, valid for graded homomorphisms.

    The chosen component ``g_k`` is windowed at its first key ``Z(mu, nu)``,
    lengthened by a tail ``kappa`` so that ``|mu kappa|`` reaches the longest
    range path among the keys of ``g_k``; the window then cuts out exactly
    ``Z(mu kappa, nu kappa)`` with coefficient ``c``.
    """
    g = f.graph
    k = choose_grade(f)
    gk = f.component(k)
    (mu, nu), c = gk.items()[0]
    longest = max(len(b.mu.edges) for b in gk.terms)
    kappa = _first_edge_path(g, mu.s, max(0, longest - len(mu.edges)))
    mk, nk = compose_paths(mu, kappa), compose_paths(nu, kappa)
    X0 = CylSet.raw([unit_cylinder(mk)])
    Y0 = CylSet.raw([unit_cylinder(nk)])
    B = CylSet.raw([Basic(mk, nk)])
    return Certificate(X0, Y0, B, c, Y0, grade=k)


def positivity_bound(gk: Element, u: Point) -> tuple:
    """``(<rho(g* g) delta_u, delta_u>, sum_{u in s(V)} |a_V|^2)``, both exact."""
    from .representations import delta, inner_product, regular_rep_apply

    lhs = inner_product(regular_rep_apply(u, mul(gk.star(), gk), delta(u)), delta(u))
    rhs = sum((c.norm() for b, c in gk.terms.items() if u.has_prefix(b.nu)), Fraction(0))
    return lhs, rhs


def _seed_source(g: Graph, nu: Path, seed: Point) -> Optional[Point]:
    if seed.has_prefix(nu):
        return seed
    br = _bridge(g, nu.s, {seed.r})
    if br is None:
        return None
    return seed.prepend(compose_paths(nu, br))


def ck_certificate(f: Element, seed: Point, depth_limit: int = 8) -> Certificate:
    """Search windows along the seed for ``1_{X0} f 1_{Y0} = c 1_B``.

    Depths ``l = 0 .. depth_limit`` are tried in order; at each depth every
    key ``Z(mu, nu)`` is tried in canonical order with source point ``y``
    (the seed, or the seed moved into ``Z(nu)``), ``Y0 = Z(y[:l])`` and
    ``X0 = Z(x[:l + n])`` for ``x = mu shift^{|nu|} y``.
    """
    g = f.graph
    if not f.terms:
        raise ZeroElement("the element is zero")
    if not condition_L(g):
        warnings.warn("graph fails Condition (L); the search may not terminate", stacklevel=2)
    if isinstance(seed, EvPerPoint):
        warnings.warn("seed is eventually periodic; the search may not terminate", stacklevel=2)
    starts = []
    for (mu, nu), _ in f.items():
        y = _seed_source(g, nu, seed)
        if y is not None:
            x = y.shift(len(nu.edges)).prepend(mu)
            starts.append((x, len(mu.edges) - len(nu.edges), y))
    for ell in range(depth_limit + 1):
        for x, n, y in starts:
            if ell + n < 0:
                continue
            X0 = CylSet.raw([unit_cylinder(x.prefix(ell + n))])
            Y0 = CylSet.raw([unit_cylinder(y.prefix(ell))])
            hit = _constant_bisection(_window(g, X0, f, Y0))
            if hit is None:
                continue
            c, B = hit
            if _star_identity(g, c, B, Y0):
                return Certificate(X0, Y0, B, c, Y0)
    raise Exhausted(depth_limit)


def verify_certificate(cert: Certificate, f: Element) -> bool:
    """Re-derive every identity the certificate claims."""
    g = f.graph
    c = as_coeff(cert.c)
    if not c or not cert.K:
        return False
    h = f.component(cert.grade) if cert.graded else f
    if not h.terms:
        return False
    if _window(g, cert.X0, h, cert.Y0) != indicator(g, cert.B, c):
        return False
    if not is_bisection(cert.B):
        return False
    return _star_identity(g, c, cert.B, cert.K)
