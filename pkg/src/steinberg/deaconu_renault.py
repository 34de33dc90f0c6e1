"""The shift groupoid ``{(x, k - l, y) : T^k x = T^l y}`` of a one-sided SFT.

Points are one-sided admissible words and ``T`` is the left shift.  Basic
sets ``Z(U, V, k, l)`` are given by finite unions of word cylinders ``U``
and ``V``.  Internally a basic set is cut into atoms ``(p, q, k, l)``: the
set ``{(p t, k - l, q t)}`` with ``p[k:] == q[l:]`` nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .bisections import Basic, CylSet
from .errors import ImageMismatch, NotEdgeShift, NotInjective, NotSurjective
from .graph import Graph
from .points import canonical_lasso

__all__ = [
    "Sft",
    "edge_shift",
    "DrBasic",
    "DrAtom",
    "DrPoint",
    "DrElement",
    "dr_validate",
    "dr_mul",
    "dr_inverse",
    "dr_cocycle",
    "dr_member",
    "dr_to_graph",
]

Word = tuple


@dataclass(frozen=True)
class Sft:
    """Alphabet plus allowed transitions; every letter needs a successor."""

    alphabet: tuple
    allowed: frozenset

    def __post_init__(self):
        letters = set(self.alphabet)
        for x, y in self.allowed:
            if x not in letters or y not in letters:
                raise ValueError(f"transition {x}->{y} uses an unknown letter")
        for x in self.alphabet:
            if not self.successors(x):
                raise NotSurjective(f"letter {x!r} has no admissible successor")

    def successors(self, x: str) -> tuple:
        return tuple(y for y in self.alphabet if (x, y) in self.allowed)

    def admissible(self, w: Word) -> bool:
        return all(c in self.alphabet for c in w) and all((w[i], w[i + 1]) in self.allowed for i in range(len(w) - 1))

    def extensions(self, w: Word, length: int) -> list:
        """Admissible words of the given length having ``w`` as a prefix."""
        if len(w) >= length:
            return [w]
        frontier = [w] if w else [(c,) for c in self.alphabet]
        while len(frontier[0]) < length:
            frontier = [u + (y,) for u in frontier for y in self.successors(u[-1])]
        return frontier

    def words(self, length: int) -> list:
        return self.extensions((), length)


def edge_shift(g: Graph) -> Sft:
    """Letters are edges; ``e f`` is allowed when ``s(e) == r(f)``."""
    names = g.edge_names
    allowed = frozenset((e, f) for e in names for f in names if g.s(e) == g.r(f))
    return Sft(names, allowed)


def _reduce_cover(words: Iterable[Word]) -> frozenset:
    """Drop words having a proper prefix in the set (same union of cylinders)."""
    ws = set(words)
    return frozenset(w for w in ws if not any(w[:j] in ws for j in range(len(w))))


def _refine(sft: Sft, words: Iterable[Word], length: int) -> set:
    return {x for w in words for x in sft.extensions(w, length)}


def _same_union(sft: Sft, a: Iterable[Word], b: Iterable[Word]) -> bool:
    a, b = list(a), list(b)
    n = max((len(w) for w in a + b), default=1)
    return _refine(sft, a, n) == _refine(sft, b, n)


def _image(sft: Sft, w: Word, k: int) -> list:
    """``T^k [w]`` as a union of cylinders (needs ``len(w) >= k``)."""
    if len(w) > k:
        return [w[k:]]
    return [(y,) for y in sft.successors(w[-1])]


class DrAtom(NamedTuple):
    p: Word
    q: Word
    k: int
    l: int

    def extend(self, r: Word) -> "DrAtom":
        return DrAtom(self.p + r, self.q + r, self.k, self.l)


@dataclass(frozen=True)
class DrBasic:
    """``Z(U, V, k, l) = {(x, k - l, y) : x in U, y in V, T^k x = T^l y}``."""

    sft: Sft
    U: frozenset
    V: frozenset
    k: int
    l: int

    @property
    def degree(self) -> int:
        return self.k - self.l

    def atoms(self) -> list:
        m = max([1] + [len(u) - self.k for u in self.U] + [len(v) - self.l for v in self.V])
        ps = _refine(self.sft, self.U, self.k + m)
        qs = _refine(self.sft, self.V, self.l + m)
        by_tail: dict = {}
        for q in qs:
            by_tail.setdefault(q[self.l :], []).append(q)
        return sorted(DrAtom(p, q, self.k, self.l) for p in ps for q in by_tail.get(p[self.k :], ()))

    def __str__(self) -> str:
        def ws(s):
            return ",".join(".".join(w) for w in sorted(s))

        return f"Z({ws(self.U)};{ws(self.V)};{self.k};{self.l})"


def _letters_if_empty(sft: Sft, words: Iterable[Word]) -> list:
    out = []
    for w in words:
        w = tuple(w)
        out.extend([(c,) for c in sft.alphabet] if not w else [w])
    return out


def dr_validate(sft: Sft, U: Iterable[Word], V: Iterable[Word], k: int, l: int) -> DrBasic:
    """Build ``Z(U, V, k, l)`` after checking injectivity of the shifts and equal images."""
    if k < 0 or l < 0:
        raise ValueError("exponents must be nonnegative")
    U = _reduce_cover(w for w in _letters_if_empty(sft, U) if sft.admissible(w))
    V = _reduce_cover(w for w in _letters_if_empty(sft, V) if sft.admissible(w))
    for name, ws, e in (("U", U, k), ("V", V, l)):
        for w in ws:
            if len(w) < e:
                raise NotInjective(f"T^{e} is not injective on [{'.'.join(w)}] in {name}")
        imgs = [_image(sft, w, e) for w in sorted(ws)]
        for i in range(len(imgs)):
            for j in range(i + 1, len(imgs)):
                n = max(len(x) for x in imgs[i] + imgs[j])
                if _refine(sft, imgs[i], n) & _refine(sft, imgs[j], n):
                    raise NotInjective(f"T^{e} identifies points of distinct cylinders in {name}")
    img_u = [x for w in U for x in _image(sft, w, k)]
    img_v = [x for w in V for x in _image(sft, w, l)]
    if not _same_union(sft, img_u, img_v):
        raise ImageMismatch(f"T^{k}(U) != T^{l}(V)")
    return DrBasic(sft, U, V, k, l)


def _atom_mul(sft: Sft, a: DrAtom, b: DrAtom):
    """Compose ``(x, n, y)`` from ``a`` with ``(y, n', z)`` from ``b``.

    The middle words are first made equal by extending the shorter atom;
    with ``M = max(l, k')`` the product satisfies
    ``T^(k + M - l) x = T^M y = T^(l' + M - k') z``.
    """
    if len(a.q) <= len(b.p):
        if b.p[: len(a.q)] != a.q:
            return None
        a = a.extend(b.p[len(a.q) :])
    else:
        if a.q[: len(b.p)] != b.p:
            return None
        b = b.extend(a.q[len(b.p) :])
    big = max(a.l, b.k)
    return DrAtom(a.p, b.q, a.k + big - a.l, b.l + big - b.k)


def dr_mul(A: DrBasic, B: DrBasic) -> list:
    """``AB`` as a list of basic sets (empty list for the empty set)."""
    out = []
    for a in A.atoms():
        for b in B.atoms():
            c = _atom_mul(A.sft, a, b)
            if c is not None:
                out.append(DrBasic(A.sft, frozenset([c.p]), frozenset([c.q]), c.k, c.l))
    return sorted(set(out), key=lambda d: (sorted(d.U), sorted(d.V), d.k, d.l))


def dr_inverse(A: DrBasic) -> DrBasic:
    return DrBasic(A.sft, A.V, A.U, A.l, A.k)


# points and elements ------------------------------------------------------


class DrPoint(NamedTuple):
    """The eventually periodic word ``head cycle cycle ...`` in canonical form."""

    head: Word
    cycle: Word

    @classmethod
    def make(cls, head: Word, cycle: Word) -> "DrPoint":
        return cls(*canonical_lasso(tuple(head), tuple(cycle)))

    def letter(self, i: int) -> str:
        if i < len(self.head):
            return self.head[i]
        return self.cycle[(i - len(self.head)) % len(self.cycle)]

    def prefix(self, n: int) -> Word:
        return tuple(self.letter(i) for i in range(n))

    def shift(self, k: int) -> "DrPoint":
        if k <= len(self.head):
            return DrPoint(self.head[k:], self.cycle)
        j = (k - len(self.head)) % len(self.cycle)
        return DrPoint((), self.cycle[j:] + self.cycle[:j])


class DrElement(NamedTuple):
    x: DrPoint
    n: int
    y: DrPoint


def dr_member(el: DrElement, A: DrBasic) -> bool:
    """Membership read off the definition, independent of the atom cutting."""
    if el.n != A.k - A.l:
        return False
    if not any(el.x.prefix(len(u)) == u for u in A.U):
        return False
    if not any(el.y.prefix(len(v)) == v for v in A.V):
        return False
    return el.x.shift(A.k) == el.y.shift(A.l)


def dr_cocycle(obj: Union[DrBasic, DrElement]) -> int:
    """``c(x, n, y) = n``; on a basic set, the constant value ``k - l``."""
    if isinstance(obj, DrBasic):
        return obj.k - obj.l
    return obj.n


def _is_edge_shift(sft: Sft, g: Graph) -> bool:
    return set(sft.alphabet) == set(g.edge_names) and sft.allowed == edge_shift(g).allowed


def dr_to_graph(A: DrBasic, g: Graph) -> CylSet:
    """The same subset of the graph groupoid: atom ``(p, q)`` becomes ``Z(p, q)``."""
    if not _is_edge_shift(A.sft, g):
        raise NotEdgeShift("the shift is not the edge shift of this graph")
    return CylSet(g, (Basic(g.path(a.p), g.path(a.q)) for a in A.atoms()))
