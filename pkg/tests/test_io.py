"""File format round trips and error reporting."""

import json

import pytest

from spectral_lb.catalog import cycle, petersen
from spectral_lb.decomp import CliquePartition
from spectral_lb.graph_io import (
    ParseError,
    certificate_to_json,
    format_edge_list,
    graph_from_json,
    graph_to_json,
    load_graph_text,
    parse_edge_list,
    partition_from_json,
    partition_to_json,
    require_simple,
)
from spectral_lb.graphs import build_multigraph, build_weighted, Multigraph, SimpleGraph, WeightedGraph
from spectral_lb.rationals import Q


def test_edge_list_roundtrip_simple():
    g = petersen()
    parsed = parse_edge_list(format_edge_list(g))
    assert require_simple(parsed).rows == g.rows


def test_edge_list_weights_and_loops():
    text = "3 4\n0 1 1/2\n1 2 -2\n0 2\n1 1 3\n"
    h = parse_edge_list(text)
    assert h.weight(0, 1) == Q(1, 2)
    assert h.weight(1, 2) == Q(-2)
    assert h.weight(0, 2) == Q(1)
    assert h.weight(1, 1) == Q(3)


def test_edge_list_comments_and_blank_lines():
    text = "# a graph\n\n3 2  # header\n0 1\n# middle comment\n1 2\n"
    h = parse_edge_list(text)
    assert len(h.weights) == 2


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_edge_list("3 1\n0 9\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_edge_list("nonsense\n")
    assert err.value.line == 1
    with pytest.raises(ParseError):
        parse_edge_list("2 5\n0 1\n")  # edge count mismatch
    with pytest.raises(ParseError) as err:
        parse_edge_list("2 1\n0 1 x/y\n")
    assert err.value.line == 2


def test_json_roundtrips():
    for g in (
        petersen(),
        build_multigraph(3, {(0, 1): 2, (1, 1): 1}),
        build_weighted(3, {(0, 1): Q(-1, 3), (2, 2): Q(5)}, labels=["a", "b", "c"]),
    ):
        doc = graph_to_json(g)
        back = graph_from_json(json.loads(json.dumps(doc)))
        assert type(back) is type(g)
        if isinstance(g, SimpleGraph):
            assert back.rows == g.rows
        elif isinstance(g, Multigraph):
            assert back.mult == g.mult
        else:
            assert back.weights == g.weights and back.labels == g.labels


def test_json_version_gate():
    with pytest.raises(ParseError):
        graph_from_json({"fmt": 2, "type": "simple", "n": 1, "edges": []})


def test_autodetect():
    as_json = json.dumps(graph_to_json(cycle(4)))
    g = load_graph_text(as_json)
    assert isinstance(g, SimpleGraph) and g.m == 4
    g2 = load_graph_text("# comment first\n3 1\n0 1\n")
    assert isinstance(g2, WeightedGraph)
    with pytest.raises(ParseError):
        load_graph_text("   \n# only comments\n")


def test_require_simple():
    w = parse_edge_list("3 2\n0 1\n1 2\n")
    g = require_simple(w)
    assert g.m == 2
    with pytest.raises(ValueError):
        require_simple(parse_edge_list("3 1\n0 1 2\n"))
    with pytest.raises(ValueError):
        require_simple(parse_edge_list("3 1\n1 1\n"))


def test_partition_documents():
    part = CliquePartition(2, ((0, 1, 2), (0, 1, 2), (1, 2)))
    doc = partition_to_json(part)
    back = partition_from_json(json.loads(json.dumps(doc)))
    assert back == part
    with pytest.raises(ParseError):
        partition_from_json({"cliques": [[0, 1]]})


def test_certificate_documents():
    from spectral_lb.cliqopt import lambda_star_C, lambda_star_K
    from spectral_lb.catalog import octahedron

    res = lambda_star_K(octahedron())
    doc = certificate_to_json(res)
    assert doc["mu"] == res.mu and doc["value"] == "-2"
    assert "cliques" in doc
    res_c = lambda_star_C(cycle(5))
    doc_c = certificate_to_json(res_c)
    assert doc_c["value"] == "-2" and "pieces" in doc_c
