import random
from fractions import Fraction

import pytest

from leavitt import (
    GraphError,
    ParseError,
    PrimeField,
    QQ,
    format_element,
    line_graph,
    linear,
    make_graph,
    monomial_element,
    parse_element,
    parse_graph,
    rose_graph,
    rose_with_tail,
    serialize_graph,
    vertex,
    zero,
)

from oracles import EXAMPLE_TWO_VERTEX_THREE_EDGE, random_element, random_multigraph


class TestGraphDocuments:
    def test_rose_document(self):
        text = """
        {"vertices": ["v"],
         "edges": [{"name": "y1", "src": "v", "dst": "v"},
                   {"name": "y2", "src": "v", "dst": "v"}]}
        """
        assert parse_graph(text) == rose_graph(2)

    def test_two_vertex_three_edge_document(self):
        text = """
        {"vertices": ["v", "w"],
         "edges": [{"name": "e", "src": "v", "dst": "w"},
                   {"name": "f", "src": "v", "dst": "w"},
                   {"name": "g", "src": "w", "dst": "v"}]}
        """
        assert parse_graph(text) == EXAMPLE_TWO_VERTEX_THREE_EDGE

    def test_unknown_vertex(self):
        with pytest.raises(GraphError, match="unknown vertex"):
            parse_graph('{"vertices": ["v"], "edges": [{"name": "e", "src": "v", "dst": "z"}]}')

    def test_duplicate_labels(self):
        with pytest.raises(GraphError, match="duplicate"):
            parse_graph('{"vertices": ["v", "v"], "edges": []}')

    def test_malformed_documents(self):
        for text in ("not json", "[1, 2]", '{"vertices": "v"}', '{"vertices": ["v"]}',
                     '{"vertices": ["v"], "edges": [{"name": "e"}]}'):
            with pytest.raises(ParseError):
                parse_graph(text)

    def test_round_trip_preserves_order(self):
        rng = random.Random(89)
        for _ in range(120):
            g = random_multigraph(rng)
            assert parse_graph(serialize_graph(g)) == g
        # declared order is part of equality: a permuted graph is different
        g = make_graph(["a", "b"], [("e1", "a", "b"), ("e2", "b", "a")])
        h = make_graph(["b", "a"], [("e1", "a", "b"), ("e2", "b", "a")])
        assert g != h
        assert parse_graph(serialize_graph(h)) == h


class TestParseElement:
    def test_vertex(self):
        g = line_graph(3)
        assert parse_element(g, "v1") == vertex(g, "v1")

    def test_coefficient_and_ghost(self):
        g = rose_graph(2)
        got = parse_element(g, "1/2*y1.y1^* - v")
        expected = linear(
            Fraction(1, 2),
            monomial_element(g, g.path(["y1"]), g.path(["y1"])),
            -1,
            vertex(g, "v"),
        )
        assert got == expected

    def test_non_composable_chain_is_zero(self):
        g = line_graph(3)
        assert parse_element(g, "y1.y2^*").is_zero

    def test_whitespace_and_signs(self):
        g = rose_graph(2)
        assert parse_element(g, " v -  y1 + 0*y2 ") == parse_element(g, "v - y1")
        assert parse_element(g, "v + -1*y1") == parse_element(g, "v - y1")
        assert parse_element(g, "-2/3*v") == linear(Fraction(-2, 3), vertex(g, "v"), 0, zero(g))

    def test_starred_vertex_is_vertex(self):
        g = rose_graph(2)
        assert parse_element(g, "v^*") == vertex(g, "v")

    def test_errors(self):
        g = rose_graph(2)
        with pytest.raises(ParseError, match="unknown identifier"):
            parse_element(g, "zz")
        with pytest.raises(ParseError):
            parse_element(g, "1/0*v")
        with pytest.raises(ParseError):
            parse_element(g, "2")  # bare scalar is not an element
        with pytest.raises(ParseError):
            parse_element(g, "v +")
        with pytest.raises(ParseError):
            parse_element(g, "")
        with pytest.raises(ParseError):
            parse_element(g, "v ! y1")

    def test_prime_field_coefficients(self):
        g = rose_graph(2)
        f5 = PrimeField(5)
        el = parse_element(g, "7*v + 1/2*y1", f5)
        assert el.coeff(next(iter(vertex(g, "v", f5).terms))) == 2
        assert not el.is_zero


class TestFormatElement:
    def test_examples(self):
        g = rose_graph(2)
        assert format_element(zero(g)) == "0"
        assert format_element(vertex(line_graph(3), "v1")) == "v1"
        got = format_element(linear(-1, parse_element(g, "y1"), 1, vertex(g, "v")))
        assert got == "v - y1"

    def test_leading_negative_coefficient(self):
        g = rose_graph(2)
        el = linear(-1, vertex(g, "v"), 0, zero(g))
        text = format_element(el)
        assert text == "-1*v"
        assert parse_element(g, text) == el

    def test_round_trip_random(self):
        rng = random.Random(97)
        for g in (line_graph(4), rose_graph(2), rose_with_tail(2, 2)):
            for _ in range(1000):
                el = random_element(rng, g)
                assert parse_element(g, format_element(el)) == el

    def test_round_trip_prime_field(self):
        rng = random.Random(101)
        f7 = PrimeField(7)
        g = rose_graph(2)
        for _ in range(300):
            el = random_element(rng, g, field=f7)
            assert parse_element(g, format_element(el), f7) == el
