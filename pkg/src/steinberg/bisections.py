"""Compact open graded bisections ``Z(mu, nu)`` and finite unions of them.

``Z(mu, nu) = {(mu x, |mu| - |nu|, nu x) : x infinite, r(x) = s(mu)}``.  Two
nonempty basics meet only when one pair extends the other by a common tail,
so intersections and containments are decided on the path pairs alone.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import NotComposable
from .graph import Graph, Path, compose_paths
from .points import GroupoidElement

__all__ = [
    "Basic",
    "basic",
    "unit_cylinder",
    "mul_basic",
    "inv_basic",
    "intersect_basic",
    "contains_basic",
    "ancestors",
    "expand_siblings",
    "disjointify",
    "CylSet",
    "is_bisection",
    "member",
    "member_basic",
    "set_product",
]


class Basic(NamedTuple):
    """The basic bisection ``Z(mu, nu)``; requires ``s(mu) == s(nu)``."""

    mu: Path
    nu: Path

    @property
    def degree(self) -> int:
        return len(self.mu.edges) - len(self.nu.edges)

    @property
    def depth(self) -> int:
        return max(len(self.mu.edges), len(self.nu.edges))

    def is_unit(self) -> bool:
        return self.mu == self.nu

    def sort_key(self) -> tuple:
        return (self.degree, self.mu.edges, self.mu.verts, self.nu.edges, self.nu.verts)

    def __str__(self) -> str:
        return f"[{self.mu}|{self.nu}]"


def basic(mu: Path, nu: Path) -> Basic:
    if mu.s != nu.s:
        raise NotComposable(f"Z({mu},{nu}) needs s(mu) == s(nu)")
    return Basic(mu, nu)


def unit_cylinder(mu: Path) -> Basic:
    """``Z(mu) = Z(mu, mu)`` as a subset of the unit space."""
    return Basic(mu, mu)


def _split(prefix: Path, path: Path) -> Optional[Path]:
    """If ``prefix`` is a prefix of ``path`` return the remainder."""
    n = len(prefix.edges)
    if prefix.verts[0] != path.verts[0] or path.edges[:n] != prefix.edges:
        return None
    return path.suffix(n)


def mul_basic(a: Basic, b: Basic) -> Optional[Basic]:
    """Set product ``Z(alpha, beta) Z(gamma, delta)``; None stands for the empty set."""
    alpha, beta = a
    gamma, delta = b
    if len(beta.edges) <= len(gamma.edges):
        rest = _split(beta, gamma)
        if rest is None:
            return None
        return Basic(compose_paths(alpha, rest), delta)
    rest = _split(gamma, beta)
    if rest is None:
        return None
    return Basic(alpha, compose_paths(delta, rest))


def inv_basic(a: Basic) -> Basic:
    return Basic(a.nu, a.mu)


def intersect_basic(a: Basic, b: Basic) -> Optional[Basic]:
    """Intersection of two basics (None when empty)."""
    if a.degree != b.degree:
        return None
    if len(a.mu.edges) > len(b.mu.edges):
        a, b = b, a
    tail = _split(a.mu, b.mu)
    if tail is None:
        return None
    rest = _split(a.nu, b.nu)
    if rest is None or rest.edges != tail.edges:
        return None
    return b


def contains_basic(big: Basic, small: Basic) -> bool:
    """True when ``small`` is ``big`` extended by a common tail."""
    return intersect_basic(big, small) == small


def ancestors(a: Basic) -> Iterator[Basic]:
    """Strict ancestors: strip common trailing edges one at a time."""
    mu, nu = a
    while mu.edges and nu.edges and mu.edges[-1] == nu.edges[-1]:
        mu = mu.prefix(len(mu.edges) - 1)
        nu = nu.prefix(len(nu.edges) - 1)
        yield Basic(mu, nu)


def parent(a: Basic) -> Optional[Basic]:
    return next(ancestors(a), None)


def expand_siblings(g: Graph, a: Basic) -> list:
    """``{Z(mu e, nu e) : r(e) = s(mu)}``, a partition of ``Z(mu, nu)``."""
    mu, nu = a
    out = []
    for e in g.incoming(mu.verts[-1]):
        w = g.s(e)
        out.append(Basic(Path(mu.edges + (e,), mu.verts + (w,)), Path(nu.edges + (e,), nu.verts + (w,))))
    return out


def disjointify(g: Graph, basics: Iterable[Basic]) -> frozenset:
    """Pairwise disjoint basics with the same union as ``basics``.

    Any member that strictly contains another member is split into its
    siblings until no containments remain.  Every output lies inside some
    input, and an output meeting an input lies inside it.
    """
    current = set(basics)
    while True:
        split = {anc for b in current for anc in ancestors(b) if anc in current}
        if not split:
            return frozenset(current)
        current -= split
        for a in split:
            current.update(expand_siblings(g, a))


class CylSet(frozenset):
    """A finite union of basics, stored as pairwise disjoint members."""

    def __new__(cls, g: Graph, basics: Iterable[Basic] = ()):
        return super().__new__(cls, disjointify(g, basics))

    @classmethod
    def raw(cls, basics: Iterable[Basic]) -> "CylSet":
        """Wrap members already known to be disjoint."""
        return super().__new__(cls, basics)

    def sorted(self) -> list:
        return sorted(self, key=Basic.sort_key)

    def __str__(self) -> str:
        return "{" + ",".join(str(b) for b in self.sorted()) + "}"

    def __repr__(self) -> str:
        return f"CylSet({self})"

    def inverse(self) -> "CylSet":
        return CylSet.raw(inv_basic(b) for b in self)

    def sources(self) -> list:
        return [b.nu for b in self]

    def ranges(self) -> list:
        return [b.mu for b in self]


def _comparable(p: Path, q: Path) -> bool:
    if len(p.edges) > len(q.edges):
        p, q = q, p
    return _split(p, q) is not None


def is_bisection(s: Iterable[Basic]) -> bool:
    """Range cylinders pairwise disjoint and source cylinders pairwise disjoint.

    Two path cylinders ``Z(p)``, ``Z(q)`` meet exactly when one path is a
    prefix of the other.
    """
    members = list(s)
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if _comparable(a.mu, b.mu) or _comparable(a.nu, b.nu):
                return False
    return True


def member_basic(gamma: GroupoidElement, a: Basic) -> bool:
    mu, nu = a
    if gamma.n != len(mu.edges) - len(nu.edges):
        return False
    if len(mu.edges) < gamma.k:
        return False
    return gamma.x.has_prefix(mu) and gamma.y.has_prefix(nu)


def member(gamma: GroupoidElement, s: Iterable[Basic]) -> bool:
    return any(member_basic(gamma, a) for a in s)


def set_product(g: Graph, u: Iterable[Basic], v: Iterable[Basic]) -> CylSet:
    """``UV`` for finite unions of basics."""
    v = list(v)
    prods = (mul_basic(a, b) for a in u for b in v)
    return CylSet(g, (p for p in prods if p is not None))
