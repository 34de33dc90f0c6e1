"""Finite directed graphs and finite paths.

Conventions (used everywhere in the package): an edge ``e`` points from its
source ``s(e)`` to its range ``r(e)``, paths compose categorically
(``e1 e2 ... en`` with ``s(e_i) = r(e_{i+1})``), and "no sources" means that
every vertex receives at least one edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    DuplicateId,
    NoSourcesViolation,
    NotComposable,
    ParseError,
    UnknownEdge,
    UnknownVertex,
)

NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


class Edge(NamedTuple):
    name: str
    r: str
    s: str


class Path(NamedTuple):
    """A finite path, stored with its vertex sequence.

    ``verts[0]`` is the range and ``verts[-1]`` the source; ``verts[i]`` is
    ``s(edges[i-1]) = r(edges[i])``.  The empty path at ``v`` has
    ``edges == ()`` and ``verts == (v,)``.
    """

    edges: tuple
    verts: tuple

    @property
    def r(self) -> str:
        return self.verts[0]

    @property
    def s(self) -> str:
        return self.verts[-1]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def prefix(self, n: int) -> "Path":
        return Path(self.edges[:n], self.verts[: n + 1])

    def suffix(self, n: int) -> "Path":
        """Drop the first ``n`` edges."""
        return Path(self.edges[n:], self.verts[n:])

    def is_prefix_of(self, other: "Path") -> bool:
        n = len(self.edges)
        return self.verts[0] == other.verts[0] and other.edges[:n] == self.edges

    def __mul__(self, other: "Path") -> "Path":
        return compose_paths(self, other)

    def __str__(self) -> str:
        return ".".join(self.edges) if self.edges else self.verts[0]


def vertex_path(v: str) -> Path:
    return Path((), (v,))


def compose_paths(p: Path, q: Path) -> Path:
    """Concatenate ``p`` then ``q``; requires ``s(p) == r(q)``."""
    if p.verts[-1] != q.verts[0]:
        raise NotComposable(f"cannot compose {p} (source {p.s}) with {q} (range {q.r})")
    return Path(p.edges + q.edges, p.verts + q.verts[1:])


@dataclass(frozen=True)
class Graph:
    """A finite directed graph in which every vertex receives an edge."""

    vertices: tuple
    edges: tuple
    _r: dict = field(init=False, repr=False, compare=False, hash=False)
    _s: dict = field(init=False, repr=False, compare=False, hash=False)
    _incoming: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        r = {e.name: e.r for e in self.edges}
        s = {e.name: e.s for e in self.edges}
        incoming = {v: [] for v in self.vertices}
        for e in self.edges:
            incoming[e.r].append(e.name)
        object.__setattr__(self, "_r", r)
        object.__setattr__(self, "_s", s)
        object.__setattr__(self, "_incoming", {v: tuple(es) for v, es in incoming.items()})

    def r(self, e: str) -> str:
        try:
            return self._r[e]
        except KeyError:
            raise UnknownEdge(e) from None

    def s(self, e: str) -> str:
        try:
            return self._s[e]
        except KeyError:
            raise UnknownEdge(e) from None

    def has_edge(self, e: str) -> bool:
        return e in self._r

    def has_vertex(self, v: str) -> bool:
        return v in self._incoming

    @property
    def edge_names(self) -> tuple:
        return tuple(e.name for e in self.edges)

    def incoming(self, v: str) -> tuple:
        """Edges ``e`` with ``r(e) == v``, in declaration order."""
        try:
            return self._incoming[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def in_degree(self, v: str) -> int:
        return len(self.incoming(v))

    def vertex(self, v: str) -> Path:
        if v not in self._incoming:
            raise UnknownVertex(v)
        return vertex_path(v)

    def path(self, edges: Iterable[str] | str, anchor: str | None = None) -> Path:
        """Build a path from edge names; ``anchor`` is needed only when empty.

        A string argument is split on ``.``.
        """
        if isinstance(edges, str):
            edges = tuple(x for x in edges.split(".") if x)
        edges = tuple(edges)
        if not edges:
            if anchor is None:
                raise ValueError("empty path needs an anchor vertex")
            return self.vertex(anchor)
        verts = [self.r(edges[0])]
        for i, e in enumerate(edges):
            if self.r(e) != verts[-1]:
                raise NotComposable(
                    f"edge {e} has range {self.r(e)} but {edges[i - 1]} has source {verts[-1]}"
                )
            verts.append(self.s(e))
        if anchor is not None and verts[0] != anchor:
            raise NotComposable(f"path {'.'.join(edges)} does not start at {anchor}")
        return Path(edges, tuple(verts))

    def extend(self, p: Path, e: str) -> Path:
        """Append one edge to ``p``."""
        if self.r(e) != p.verts[-1]:
            raise NotComposable(f"cannot append {e} to {p}")
        return Path(p.edges + (e,), p.verts + (self.s(e),))

    def paths_from(self, v: str, length: int) -> Iterator[Path]:
        """All paths of exactly ``length`` edges with range ``v``."""
        frontier = [self.vertex(v)]
        for _ in range(length):
            frontier = [self.extend(p, e) for p in frontier for e in self.incoming(p.s)]
        return iter(frontier)

    def paths_upto(self, length: int, v: str | None = None) -> Iterator[Path]:
        """All paths with at most ``length`` edges (optionally with range ``v``)."""
        starts = self.vertices if v is None else (v,)
        for start in starts:
            frontier = [self.vertex(start)]
            for _ in range(length + 1):
                yield from frontier
                frontier = [self.extend(p, e) for p in frontier for e in self.incoming(p.s)]

    def paths_ending_at(self, w: str, length: int) -> list:
        """All paths of exactly ``length`` edges with source ``w``."""
        frontier = [vertex_path(w)]
        for _ in range(length):
            nxt = []
            for p in frontier:
                for e in self.edges:
                    if e.s == p.verts[0]:
                        nxt.append(Path((e.name,) + p.edges, (e.r,) + p.verts))
            frontier = nxt
        return frontier

    def cycles(self, max_length: int) -> list:
        """All cycles of length 1..max_length (each rotation listed separately)."""
        return [
            p
            for p in self.paths_upto(max_length)
            if p.edges and p.r == p.s
        ]


def validate_graph(vertices: Iterable[str], edges: Iterable[tuple]) -> Graph:
    """Check identifiers and the no-sources hypothesis, returning a Graph."""
    vertices = tuple(vertices)
    edges = tuple(Edge(*e) for e in edges)
    seen: set = set()
    for name in vertices + tuple(e.name for e in edges):
        if not NAME_RE.match(name):
            raise DuplicateId(f"invalid identifier {name!r}")
        if name in seen:
            raise DuplicateId(f"identifier {name!r} used twice")
        seen.add(name)
    vset = set(vertices)
    for e in edges:
        for v in (e.r, e.s):
            if v not in vset:
                raise UnknownVertex(f"edge {e.name} mentions unknown vertex {v!r}")
    receiving = {e.r for e in edges}
    for v in vertices:
        if v not in receiving:
            raise NoSourcesViolation(v)
    return Graph(vertices, edges)


def parse_graph(text: str) -> Graph:
    """Parse the line format ``v <name>`` / ``e <name> <range> <source>``."""
    vertices: list = []
    edges: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 4:
            edges.append(tuple(parts[1:]))
        else:
            raise ParseError(f"cannot parse graph line {raw!r}", lineno, 1)
    return validate_graph(vertices, edges)


def format_graph(g: Graph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {e.name} {e.r} {e.s}" for e in g.edges]
    return "\n".join(lines) + "\n"


def rose(n: int) -> Graph:
    """One vertex ``v`` with ``n`` loops named a, b, c, ..."""
    names = "abcdefghijklmnopqrstuvwxyz"[:n]
    return validate_graph(["v"], [(x, "v", "v") for x in names])
