"""Computable infinite paths and elements of the graph groupoid.

An infinite path ``x = x1 x2 ...`` is anchored at its range ``r(x1)``.  Two
kinds are exact: eventually periodic points ``head . cycle^inf`` and
aperiodic points built from a deterministic edge stream (the built-in stream
routes the Fibonacci word over two first-return cycles at a vertex).

A groupoid element is a triple ``(x, n, y)`` for which some ``k - l = n``
satisfies ``shift^k(x) == shift^l(y)``; the smallest such ``k`` is kept as
the witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import NotACycle, NotComposable, NotInGroupoid
from .graph import Graph, Path, compose_paths, vertex_path

__all__ = [
    "primitive_root",
    "canonical_lasso",
    "EvPerPoint",
    "canonical_point",
    "EdgeStream",
    "FibonacciRouting",
    "AperiodicPoint",
    "fibonacci_point",
    "fibonacci_letters",
    "Point",
    "point_prefix",
    "GroupoidElement",
    "groupoid_element",
]


def primitive_root(word: tuple) -> tuple:
    """Shortest ``w`` with ``word == w * m``."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def canonical_lasso(head: tuple, cycle: tuple) -> tuple:
    """Canonical ``(head, cycle)`` for the infinite word ``head cycle cycle ...``.

    The cycle is replaced by its primitive root, then the head is shortened
    while its last letter equals the last letter of the cycle (rotating the
    cycle backwards each time).
    """
    cycle = primitive_root(tuple(cycle))
    head = tuple(head)
    while head and head[-1] == cycle[-1]:
        cycle = (cycle[-1],) + cycle[:-1]
        head = head[:-1]
    return head, cycle


def _rotate_left(c: Path, j: int) -> Path:
    j %= len(c.edges)
    if not j:
        return c
    return Path(c.edges[j:] + c.edges[:j], c.verts[j:] + c.verts[1 : j + 1])


def _rotate_right(c: Path) -> Path:
    return Path((c.edges[-1],) + c.edges[:-1], (c.verts[-2],) + c.verts[:-1])


class _PointOps:
    """Shared prefix logic; subclasses provide ``edge`` and ``vertex``."""

    __slots__ = ()

    @property
    def r(self) -> str:
        return self.vertex(0)

    def prefix(self, n: int) -> Path:
        return Path(
            tuple(self.edge(i) for i in range(n)),
            tuple(self.vertex(i) for i in range(n + 1)),
        )

    def has_prefix(self, p: Path) -> bool:
        if self.vertex(0) != p.verts[0]:
            return False
        return all(self.edge(i) == e for i, e in enumerate(p.edges))


@dataclass(frozen=True)
class EvPerPoint(_PointOps):
    """The infinite path ``head . cycle . cycle ...`` in canonical form."""

    head: Path
    cycle: Path

    def edge(self, i: int) -> str:
        lh = len(self.head.edges)
        if i < lh:
            return self.head.edges[i]
        return self.cycle.edges[(i - lh) % len(self.cycle.edges)]

    def vertex(self, i: int) -> str:
        lh = len(self.head.edges)
        if i <= lh:
            return self.head.verts[i]
        return self.cycle.verts[(i - lh) % len(self.cycle.edges)]

    def shift(self, k: int) -> "EvPerPoint":
        lh = len(self.head.edges)
        if k <= lh:
            return EvPerPoint(self.head.suffix(k), self.cycle)
        c = _rotate_left(self.cycle, k - lh)
        return EvPerPoint(vertex_path(c.r), c)

    def prepend(self, p: Path) -> "EvPerPoint":
        return canonical_point(compose_paths(p, self.head), self.cycle)

    @property
    def period(self) -> int:
        return len(self.cycle.edges)

    def __str__(self) -> str:
        return f"{self.head}~{self.cycle}"


def canonical_point(head: Path, cycle: Path) -> EvPerPoint:
    """Canonical representative of ``head . cycle^inf``."""
    if not cycle.edges or cycle.r != cycle.s:
        raise NotACycle(f"{cycle} is not a cycle")
    if head.s != cycle.r:
        raise NotComposable(f"head {head} does not end where cycle {cycle} starts")
    n = len(cycle.edges)
    root = primitive_root(cycle.edges)
    c = Path(root, cycle.verts[: len(root) + 1]) if len(root) < n else cycle
    h = head
    while h.edges and h.edges[-1] == c.edges[-1]:
        c = _rotate_right(c)
        h = h.prefix(len(h.edges) - 1)
    return EvPerPoint(h, c)


_FIB = ["a"]


def fibonacci_letters(n: int) -> str:
    """First ``n`` letters of the Fibonacci word abaababaabaab..."""
    word = _FIB[0]
    while len(word) < n:
        word = "".join("ab" if c == "a" else "a" for c in word)
    _FIB[0] = word
    return word[:n]


class EdgeStream:
    """A deterministic infinite path given as a pure function of the index.

    Subclasses implement ``edge(i)`` and ``vertex(i)`` (the range of edge
    ``i``); they must respect the composability chain and must not be
    eventually periodic for :class:`AperiodicPoint` to be exact.
    """

    def edge(self, i: int) -> str:
        raise NotImplementedError

    def vertex(self, i: int) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class FibonacciRouting(EdgeStream):
    """Route the Fibonacci word over two first-return cycles at ``vertex``.

    Letter ``a`` selects ``first`` and letter ``b`` selects ``second``.  Because
    both cycles visit ``vertex`` only at their ends, the block boundaries are
    exactly the visits to ``vertex`` and the edge stream inherits the
    aperiodicity of the Fibonacci word.
    """

    vertex_name: str
    first: Path
    second: Path
    _edges: list = field(default_factory=list, init=False, repr=False, compare=False, hash=False)
    _verts: list = field(default_factory=list, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for c in (self.first, self.second):
            if not c.edges or c.r != self.vertex_name or c.s != self.vertex_name:
                raise NotACycle(f"{c} is not a cycle at {self.vertex_name}")
            if self.vertex_name in c.verts[1:-1]:
                raise NotACycle(f"{c} returns to {self.vertex_name} early")
        if self.first == self.second:
            raise NotACycle("the two routing cycles must differ")

    def _grow(self, n: int) -> None:
        blocks = 16
        while True:
            edges: list = []
            verts: list = []
            for letter in fibonacci_letters(blocks):
                c = self.first if letter == "a" else self.second
                edges.extend(c.edges)
                verts.extend(c.verts[:-1])
            if len(edges) > n:
                break
            blocks *= 2
        self._edges[:] = edges
        self._verts[:] = verts

    def edge(self, i: int) -> str:
        if i >= len(self._edges):
            self._grow(i)
        return self._edges[i]

    def vertex(self, i: int) -> str:
        if i >= len(self._verts):
            self._grow(i)
        return self._verts[i]

    def __str__(self) -> str:
        return f"fib({self.first},{self.second})"


@dataclass(frozen=True)
class AperiodicPoint(_PointOps):
    """``head . shift^offset(stream)`` in canonical form."""

    head: Path
    stream: EdgeStream
    offset: int = 0

    def edge(self, i: int) -> str:
        lh = len(self.head.edges)
        if i < lh:
            return self.head.edges[i]
        return self.stream.edge(self.offset + i - lh)

    def vertex(self, i: int) -> str:
        lh = len(self.head.edges)
        if i <= lh:
            return self.head.verts[i]
        return self.stream.vertex(self.offset + i - lh)

    def shift(self, k: int) -> "AperiodicPoint":
        lh = len(self.head.edges)
        if k <= lh:
            return AperiodicPoint(self.head.suffix(k), self.stream, self.offset)
        off = self.offset + k - lh
        return AperiodicPoint(vertex_path(self.stream.vertex(off)), self.stream, off)

    def prepend(self, p: Path) -> "AperiodicPoint":
        return _canonical_aperiodic(compose_paths(p, self.head), self.stream, self.offset)

    def __str__(self) -> str:
        return f"{self.head}~{self.stream}+{self.offset}"


def _canonical_aperiodic(head: Path, stream: EdgeStream, offset: int) -> AperiodicPoint:
    if head.s != stream.vertex(offset):
        raise NotComposable(f"head {head} does not end at the stream vertex")
    while head.edges and offset > 0 and head.edges[-1] == stream.edge(offset - 1):
        head = head.prefix(len(head.edges) - 1)
        offset -= 1
    return AperiodicPoint(head, stream, offset)


def fibonacci_point(g: Graph, first: Path | str, second: Path | str) -> AperiodicPoint:
    """The aperiodic point routing the Fibonacci word over two cycles."""
    if isinstance(first, str):
        first = g.path(first)
    if isinstance(second, str):
        second = g.path(second)
    stream = FibonacciRouting(first.r, first, second)
    return AperiodicPoint(vertex_path(first.r), stream, 0)


Point = Union[EvPerPoint, AperiodicPoint]


def point_prefix(x: Point, n: int) -> Path:
    return x.prefix(n)


def _tails_equal(x: Point, k: int, y: Point, l: int) -> bool:
    return type(x) is type(y) and x.shift(k) == y.shift(l)


def _minimize(x: Point, n: int, y: Point, k: int) -> int:
    lo = max(0, n)
    while k - 1 >= lo and x.edge(k - 1) == y.edge(k - 1 - n):
        k -= 1
    return k


def find_witness(x: Point, n: int, y: Point) -> int | None:
    """Least ``k`` with ``shift^k(x) == shift^(k-n)(y)``, or None."""
    if type(x) is not type(y):
        return None
    if isinstance(x, EvPerPoint):
        if x.period != y.period:
            return None
        start = max(len(x.head.edges), len(y.head.edges) + n, n, 0)
        for k in range(start, start + x.period):
            if x.shift(k) == y.shift(k - n):
                return _minimize(x, n, y, k)
        return None
    if x.stream != y.stream:
        return None
    lx, ly = len(x.head.edges), len(y.head.edges)
    if n != (y.offset - ly) - (x.offset - lx):
        return None
    k = max(lx, ly + n, n, 0)
    return _minimize(x, n, y, k)


@dataclass(frozen=True)
class GroupoidElement:
    """``(x, n, y)`` with minimal witness ``k`` (and ``l = k - n``)."""

    x: Point
    n: int
    y: Point
    k: int = field(compare=False)

    @property
    def l(self) -> int:
        return self.k - self.n

    @property
    def range(self) -> Point:
        return self.x

    @property
    def source(self) -> Point:
        return self.y

    @classmethod
    def unit(cls, x: Point) -> "GroupoidElement":
        return cls(x, 0, x, 0)

    @classmethod
    def from_witness(cls, x: Point, y: Point, k: int, l: int) -> "GroupoidElement":
        if not _tails_equal(x, k, y, l):
            raise NotInGroupoid(f"shift^{k}({x}) != shift^{l}({y})")
        n = k - l
        return cls(x, n, y, _minimize(x, n, y, k))

    def inverse(self) -> "GroupoidElement":
        return GroupoidElement(self.y, -self.n, self.x, self.l)

    def __mul__(self, other: "GroupoidElement") -> "GroupoidElement":
        if self.y != other.x:
            raise NotComposable("source of the left factor differs from range of the right")
        big = max(self.l, other.k)
        k = self.k + big - self.l
        n = self.n + other.n
        return GroupoidElement(self.x, n, other.y, _minimize(self.x, n, other.y, k))

    def is_unit(self) -> bool:
        return self.n == 0 and self.x == self.y

    def __str__(self) -> str:
        return f"({self.x}; {self.n}; {self.y})"


def groupoid_element(x: Point, n: int, y: Point) -> GroupoidElement:
    k = find_witness(x, n, y)
    if k is None:
        raise NotInGroupoid(f"({x}, {n}, {y}) is not in the groupoid")
    return GroupoidElement(x, n, y, k)
