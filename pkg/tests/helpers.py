"""Fixture graphs and seeded random generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from steinberg.algebra import Element
from steinberg.bisections import Basic
from steinberg.coeffs import GaussianRational
from steinberg.graph import Graph, rose, validate_graph

R2 = rose(2)
R3 = rose(3)
C1 = validate_graph(["v"], [("a", "v", "v")])
# e: w -> v and f: v -> w  (edge tuples are name, range, source)
VW = validate_graph(["v", "w"], [("e", "v", "w"), ("f", "w", "v")])
VW_LOOP = validate_graph(["v", "w"], [("e", "v", "w"), ("f", "w", "v"), ("l", "v", "v")])
# two vertices, loops at both plus a bridge into v
BRIDGE = validate_graph(["v", "w"], [("a", "v", "v"), ("b", "w", "w"), ("c", "v", "w"), ("d", "w", "v")])
# three vertices in a ring with one chord
RING3 = validate_graph(
    ["u", "v", "w"],
    [("x", "u", "v"), ("y", "v", "w"), ("z", "w", "u"), ("t", "u", "w")],
)

CONDITION_L_GRAPHS = [R2, R3, VW_LOOP, BRIDGE, RING3]


def all_small_graphs(max_vertices: int = 3, max_edges: int = 5) -> list:
    """Every graph without sources up to the bounds, one per isomorphism class."""
    seen = set()
    out = []
    for nv in range(1, max_vertices + 1):
        verts = list(range(nv))
        pairs = [(r, s) for r in verts for s in verts]
        for ne in range(1, max_edges + 1):
            for combo in itertools.combinations_with_replacement(pairs, ne):
                if {r for r, _ in combo} != set(verts):
                    continue
                canon = min(
                    tuple(sorted((p[r], p[s]) for r, s in combo)) for p in itertools.permutations(verts)
                )
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(
                    validate_graph(
                        [f"v{i}" for i in range(nv)],
                        [(f"e{j}", f"v{r}", f"v{s}") for j, (r, s) in enumerate(canon)],
                    )
                )
    return out


@lru_cache(maxsize=None)
def paths_with_source(g: Graph, w: str, max_len: int) -> tuple:
    return tuple(p for n in range(max_len + 1) for p in g.paths_ending_at(w, n))


def random_basic(g: Graph, rng: random.Random, max_len: int = 3) -> Basic:
    w = rng.choice(g.vertices)
    ps = paths_with_source(g, w, max_len)
    return Basic(rng.choice(ps), rng.choice(ps))


def random_coeff(rng: random.Random, gaussian: bool = True, bound: int = 3) -> GaussianRational:
    while True:
        c = GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound) if gaussian else 0)
        if c:
            return c


def random_rational_coeff(rng: random.Random) -> GaussianRational:
    from fractions import Fraction

    while True:
        c = GaussianRational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        if c:
            return c


def random_terms(g: Graph, rng: random.Random, max_keys: int = 3, max_len: int = 3, gaussian: bool = True) -> list:
    return [(random_basic(g, rng, max_len), random_coeff(rng, gaussian)) for _ in range(rng.randint(1, max_keys))]


def random_element(g: Graph, rng: random.Random, max_keys: int = 3, max_len: int = 3, gaussian: bool = True) -> Element:
    return Element(g, random_terms(g, rng, max_keys, max_len, gaussian))


def random_nonzero_element(g: Graph, rng: random.Random, **kw) -> Element:
    while True:
        f = random_element(g, rng, **kw)
        if f:
            return f


def sibling_split(f: Element, rng: random.Random, rounds: int = 3) -> list:
    """A raw term list denoting ``f``: random keys replaced by their sibling families."""
    from steinberg.bisections import expand_siblings

    terms = list(f.terms.items())
    for _ in range(rounds):
        if not terms:
            break
        i = rng.randrange(len(terms))
        b, c = terms.pop(i)
        terms.extend((k, c) for k in expand_siblings(f.graph, b))
    rng.shuffle(terms)
    return terms


def random_graph(rng: random.Random, max_vertices: int = 3, max_edges: int = 6) -> Graph:
    """A random graph without sources (every vertex gets an incoming edge first)."""
    nv = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(nv)]
    edges = [(v, rng.choice(vs)) for v in vs]
    for _ in range(rng.randint(0, max_edges - nv)):
        edges.append((rng.choice(vs), rng.choice(vs)))
    return validate_graph(vs, [(f"e{j}", r, s) for j, (r, s) in enumerate(edges)])
