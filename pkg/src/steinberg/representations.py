"""Finite-dimensional representations of bisections and the regular representation.

A :class:`GeneratorAssignment` gives matrices for ``p_v``, ``s_e`` and
``s_e^*``; the bisection ``Z(mu, nu)`` is sent to ``M(s_mu) M(s_nu^*)`` where
``s_nu^* = s_{e_n}^* ... s_{e_1}^*`` and an empty path contributes ``p_v``.
Axioms R1-R3 can only be checked on a finite family, so
:func:`check_axioms` reports what it verified and to which depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

import numpy as np

from .algebra import Element
from .bisections import Basic, expand_siblings, intersect_basic, is_bisection, mul_basic
from .coeffs import ONE, ZERO, GaussianRational, as_coeff
from .errors import AxiomViolation, BaseMismatch, DepthInsufficient, DimensionMismatch
from .graph import Graph
from .points import GroupoidElement, Point

__all__ = [
    "GeneratorAssignment",
    "AxiomReport",
    "check_axioms",
    "extend_pi",
    "pi_of_terms",
    "RegularVector",
    "delta",
    "regular_rep_apply",
    "inner_product",
]

CANONICAL = "canonical"
TRIVIAL = "trivial"


def zeros(n: int) -> np.ndarray:
    m = np.empty((n, n), dtype=object)
    m.fill(ZERO)
    return m


def eye(n: int) -> np.ndarray:
    m = zeros(n)
    for i in range(n):
        m[i, i] = ONE
    return m


def as_matrix(entries, n: int) -> np.ndarray:
    """A square object array of Gaussian rationals from nested or flat entries."""
    arr = np.array(entries, dtype=object)
    if arr.size != n * n:
        raise DimensionMismatch(f"expected {n * n} entries, got {arr.size}")
    out = np.empty((n, n), dtype=object)
    for i, x in enumerate(arr.reshape(-1)):
        out[divmod(i, n)] = as_coeff(x)
    return out


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def mat_is_zero(a: np.ndarray) -> bool:
    return not any(a.flat)


class GeneratorAssignment:
    """Matrices for the generators of a graph, acting on ``dim``-space."""

    def __init__(
        self,
        graph: Graph,
        dim: int,
        p: Mapping[str, object],
        s: Mapping[str, object],
        sstar: Mapping[str, object],
        mode: str = CANONICAL,
    ):
        if mode not in (CANONICAL, TRIVIAL):
            raise ValueError(f"unknown cocycle mode {mode!r}")
        self.graph = graph
        self.dim = dim
        self.mode = mode
        self.p = {v: self._load(p, v, "p") for v in graph.vertices}
        self.s = {e: self._load(s, e, "s") for e in graph.edge_names}
        self.sstar = {e: self._load(sstar, e, "sstar") for e in graph.edge_names}
        self._cache: dict = {}

    def _load(self, table: Mapping, name: str, kind: str) -> np.ndarray:
        if name not in table:
            raise DimensionMismatch(f"no matrix given for {kind} {name}")
        m = table[name]
        if isinstance(m, np.ndarray) and m.ndim == 2 and m.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"{kind} {name} has shape {m.shape}, expected {(self.dim, self.dim)}")
        return as_matrix(m, self.dim)

    def t(self, b: Basic) -> np.ndarray:
        """``t_{Z(mu, nu)} = M(s_mu) M(s_nu^*)``."""
        hit = self._cache.get(b)
        if hit is not None:
            return hit
        mu, nu = b
        left = self.p[mu.verts[0]] if not mu.edges else None
        for e in mu.edges:
            left = self.s[e] if left is None else left.dot(self.s[e])
        right = self.p[nu.verts[0]] if not nu.edges else None
        for e in reversed(nu.edges):
            right = self.sstar[e] if right is None else right.dot(self.sstar[e])
        out = left.dot(right)
        self._cache[b] = out
        return out


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a depth-bounded axiom check; ``passed`` means verified to ``depth``."""

    passed: bool
    depth: int
    axiom: Optional[str] = None
    violation: Optional[str] = None

    def __str__(self) -> str:
        if self.passed:
            return f"verified to depth {self.depth}"
        return f"{self.axiom} violated at depth {self.depth}: {self.violation}"


def _basics_upto(g: Graph, d: int) -> list:
    by_source: dict = {}
    for p in g.paths_upto(d):
        by_source.setdefault(p.s, []).append(p)
    out = [Basic(mu, nu) for ps in by_source.values() for mu in ps for nu in ps]
    out.sort(key=Basic.sort_key)
    return out


def _sum_t(a: GeneratorAssignment, terms: Iterable) -> np.ndarray:
    acc = zeros(a.dim)
    for b, c in terms:
        acc = acc + a.t(b) * c
    return acc


def check_axioms(a: GeneratorAssignment, depth: int) -> AxiomReport:
    """Check R1-R3 on all basics with ``|mu|, |nu| <= depth``; stop at the first failure.

    R1 and R2 are checked on every ordered pair (an empty product must map
    to zero).  R3 is checked through the sibling identity
    ``t_{Z(mu,nu)} = sum_e t_{Z(mu e, nu e)}`` and on every disjoint pair whose
    union is a bisection, against the value on the normal form of the sum.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    g = a.graph
    basics = _basics_upto(g, depth)
    for u in basics:
        tu = a.t(u)
        for v in basics:
            prod = mul_basic(u, v)
            lhs = tu.dot(a.t(v))
            if prod is None:
                if not mat_is_zero(lhs):
                    return AxiomReport(False, depth, "R1", f"t_{u} t_{v} != 0 although {u}{v} is empty")
            elif not mat_equal(lhs, a.t(prod)):
                return AxiomReport(False, depth, "R2", f"t_{u} t_{v} != t_{prod}")
    for u in basics:
        if u.depth < depth:
            kids = expand_siblings(g, u)
            if not mat_equal(a.t(u), _sum_t(a, ((k, ONE) for k in kids))):
                return AxiomReport(False, depth, "R3", f"t_{u} differs from the sum over its sibling family")
    for i, u in enumerate(basics):
        for v in basics[i + 1 :]:
            if u.degree != v.degree:
                if a.mode == CANONICAL:
                    continue
            elif intersect_basic(u, v) is not None:
                continue
            if not is_bisection((u, v)):
                continue
            nf = Element(g, {u: ONE, v: ONE})
            if not mat_equal(a.t(u) + a.t(v), _sum_t(a, nf.terms.items())):
                return AxiomReport(False, depth, "R3", f"t_{u} + t_{v} != t of their union")
    return AxiomReport(True, depth)


def pi_of_terms(a: GeneratorAssignment, terms: Iterable) -> np.ndarray:
    """``sum c t_U`` over raw (basic, coefficient) pairs, without normalizing."""
    return _sum_t(a, ((b, as_coeff(c)) for b, c in terms))


def extend_pi(a: GeneratorAssignment, f: Element, report: Optional[AxiomReport] = None) -> np.ndarray:
    """The homomorphism with ``pi(1_U) = t_U``, evaluated on the normal form of ``f``.

    Without a ``report`` the axioms are checked to the depth of ``f``.
    """
    need = max(1, f.max_depth())
    if report is None:
        report = check_axioms(a, need)
    if report.depth < need:
        raise DepthInsufficient(f"axioms verified to depth {report.depth}, element needs {need}")
    if not report.passed:
        raise AxiomViolation(str(report))
    return _sum_t(a, f.terms.items())


# regular representation -------------------------------------------------


class RegularVector:
    """A finitely supported function on the source fibre ``G u``."""

    __slots__ = ("base", "entries")

    def __init__(self, base: Point, entries: Mapping[GroupoidElement, GaussianRational]):
        self.base = base
        self.entries = {k: as_coeff(c) for k, c in entries.items() if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegularVector):
            return NotImplemented
        return self.base == other.base and self.entries == other.entries

    def __add__(self, other: "RegularVector") -> "RegularVector":
        if self.base != other.base:
            raise BaseMismatch("vectors live over different units")
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out[k] + c if k in out else c
        return RegularVector(self.base, out)

    def scale(self, c) -> "RegularVector":
        c = as_coeff(c)
        return RegularVector(self.base, {k: c * v for k, v in self.entries.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}*d{k}" for k, c in self.entries.items())
        return f"RegularVector({self.base}: {inner})"


def delta(beta: GroupoidElement | Point) -> RegularVector:
    """``delta_beta``; a point ``u`` stands for the unit at ``u``."""
    if not isinstance(beta, GroupoidElement):
        beta = GroupoidElement.unit(beta)
    return RegularVector(beta.y, {beta: ONE})


def regular_rep_apply(u: Point, f: Element, vec: RegularVector) -> RegularVector:
    """``rho(f) delta_beta = sum_{s(alpha) = r(beta)} f(alpha) delta_{alpha beta}``.

    For a key ``Z(mu, nu)`` the only candidate is
    ``alpha = (mu shift^{|nu|} x, |mu| - |nu|, x)`` with ``x = r(beta)``,
    present exactly when ``nu`` is a prefix of ``x``.
    """
    if vec.base != u:
        raise BaseMismatch("vector is not supported on the fibre over u")
    out: dict = {}
    for beta, cb in vec.entries.items():
        x = beta.x
        for (mu, nu), c in f.terms.items():
            if not x.has_prefix(nu):
                continue
            y = x.shift(len(nu.edges)).prepend(mu)
            alpha = GroupoidElement.from_witness(y, x, len(mu.edges), len(nu.edges))
            key = alpha * beta
            val = c * cb
            out[key] = out[key] + val if key in out else val
    return RegularVector(u, out)


def inner_product(v: RegularVector, w: RegularVector) -> GaussianRational:
    """``(v | w) = sum_beta conj(v(beta)) w(beta)``."""
    if v.base != w.base:
        raise BaseMismatch("vectors live over different units")
    total = ZERO
    for k, c in v.entries.items():
        d = w.entries.get(k)
        if d is not None:
            total = total + c.conjugate() * d
    return total
