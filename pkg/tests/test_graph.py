import random

import pytest

from helpers import R2, VW, random_graph
from steinberg.errors import DuplicateId, NotComposable, NoSourcesViolation, UnknownEdge, UnknownVertex
from steinberg.graph import compose_paths, format_graph, parse_graph, rose, validate_graph


def test_rose_is_valid():
    g = validate_graph(["v"], [("a", "v", "v"), ("b", "v", "v")])
    assert g.vertices == ("v",) or list(g.vertices) == ["v"]
    assert set(g.edge_names) == {"a", "b"}
    assert g == rose(2) or format_graph(g) == format_graph(rose(2))


def test_isolated_vertex_is_a_source():
    with pytest.raises(NoSourcesViolation, match="w"):
        validate_graph(["v", "w"], [("a", "v", "v")])


def test_two_cycle_is_valid():
    g = validate_graph(["v", "w"], [("e", "v", "w"), ("f", "w", "v")])
    assert g.r("e") == "v" and g.s("e") == "w"
    assert g.incoming("v") == ("e",)


def test_duplicate_ids():
    with pytest.raises(DuplicateId):
        validate_graph(["v", "v"], [("a", "v", "v")])
    with pytest.raises(DuplicateId):
        validate_graph(["v"], [("a", "v", "v"), ("a", "v", "v")])
    with pytest.raises(DuplicateId):
        validate_graph(["v"], [("v", "v", "v")])


def test_unknown_vertex_in_edge():
    with pytest.raises(UnknownVertex):
        validate_graph(["v"], [("a", "v", "x")])


def test_compose_paths():
    ab = compose_paths(R2.path("a"), R2.path("b"))
    assert ab.edges == ("a", "b")
    assert compose_paths(R2.vertex("v"), R2.path("a")) == R2.path("a")
    assert compose_paths(R2.path("a"), R2.vertex("v")) == R2.path("a")
    with pytest.raises(NotComposable):
        compose_paths(VW.path("e"), VW.path("e"))


def test_path_lookup_errors():
    with pytest.raises(UnknownEdge):
        R2.path("a.z")
    with pytest.raises(NotComposable):
        VW.path("e.e")


def test_paths_ending_at_counts():
    assert len(R2.paths_ending_at("v", 3)) == 8
    # in v<->w paths alternate, so exactly one path of each length ends at each vertex
    assert [len(VW.paths_ending_at("v", n)) for n in range(4)] == [1, 1, 1, 1]
    for p in R2.paths_ending_at("v", 2):
        assert p.s == "v" and len(p) == 2


def test_text_round_trip():
    text = "# two vertices\nv v\nv w\ne e v w\ne f w v\n"
    g = parse_graph(text)
    assert g == VW or format_graph(g) == format_graph(VW)
    assert parse_graph(format_graph(g)) == g
    assert format_graph(parse_graph(format_graph(g))) == format_graph(g)


def test_random_graphs_round_trip_and_have_cycles():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng)
        assert parse_graph(format_graph(g)) == g
        assert g.cycles(len(g.vertices)), "a finite graph without sources has a cycle"


def test_rose_shape():
    g = rose(3)
    assert g.in_degree("v") == 3
    assert all(g.s(e) == g.r(e) == "v" for e in g.edge_names)
