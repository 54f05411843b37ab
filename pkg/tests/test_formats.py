import pytest

from preclusion import ParseError, cycle, emit, hypercube, parse, path, petersen
from preclusion.formats import detect_format
from preclusion.graphs import complete_bipartite
from conftest import random_corpus

# Reference encodings computed with an independent graph6 encoder before the
# build and frozen here.
C5_GRAPH6 = "Dhc"
PETERSEN_GRAPH6 = "IheA@GUAo"
Q3_GRAPH6 = "Gr`HOk"
K33_GRAPH6 = "EFz_"


def test_graph6_frozen_references():
    assert emit(cycle(5), "graph6").strip() == C5_GRAPH6
    assert emit(petersen(), "graph6").strip() == PETERSEN_GRAPH6
    assert emit(hypercube(3), "graph6").strip() == Q3_GRAPH6
    assert emit(complete_bipartite(3, 3), "graph6").strip() == K33_GRAPH6


def test_graph6_parse_c5():
    g = parse("graph6", C5_GRAPH6)
    assert g.n == 5 and g.m == 5
    assert g == cycle(5)


def test_graph6_header_accepted():
    g = parse("graph6", ">>graph6<<" + C5_GRAPH6)
    assert g == cycle(5)


def test_graph6_long_form():
    # 63 vertices needs the '~' size prefix
    p63 = path(63)
    s = emit(p63, "graph6")
    assert s.startswith("~??~")
    assert parse("graph6", s) == p63


def test_graph6_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as err:
        parse("graph6", "D\x1f")
    assert err.value.offset == 1
    with pytest.raises(ParseError):
        parse("graph6", "")
    with pytest.raises(ParseError):
        parse("graph6", "D")  # truncated body for n=5


def test_edge_list_round_trip_k2():
    g = parse("edge_list", "2 1\n0 1\n")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_edge_list_errors():
    with pytest.raises(ParseError):
        parse("edge_list", "")
    with pytest.raises(ParseError):
        parse("edge_list", "not a header\n")
    with pytest.raises(ParseError):
        parse("edge_list", "2 2\n0 1\n")  # promised 2 edges, got 1
    with pytest.raises(ParseError) as err:
        parse("edge_list", "2 1\n0 9\n")
    assert err.value.offset > 0
    with pytest.raises(ParseError):
        parse("edge_list", "2 1\n1 1\n")


def test_json_round_trip_keeps_bipartition():
    q3 = hypercube(3)
    back = parse("json", emit(q3, "json"))
    assert back == q3
    assert back.bipartition == q3.bipartition


def test_round_trip_all_formats_random_corpus():
    for g in random_corpus(40, seed=99):
        for fmt in ("graph6", "edge_list", "json"):
            assert parse(fmt, emit(g, fmt)) == g


def test_round_trip_q3():
    q3 = hypercube(3)
    for fmt in ("graph6", "edge_list", "json"):
        assert parse(fmt, emit(q3, fmt)) == q3


def test_detect_format():
    assert detect_format("8 12\n0 1\n") == "edge_list"
    assert detect_format(C5_GRAPH6 + "\n") == "graph6"
    assert detect_format("\n  \nGr`HOk\n") == "graph6"
