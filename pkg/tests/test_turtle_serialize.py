import random

from hypothesis import given, settings
from hypothesis import strategies as st

from fairmeta.rdf import (
    BlankNode,
    Graph,
    Iri,
    Literal,
    Triple,
    TurtleSyntaxError,
    graph_isomorphic,
    parse_turtle,
    serialize_turtle,
)
from graphgen import random_graph


def roundtrip(g: Graph) -> Graph:
    return parse_turtle(serialize_turtle(g))


def test_empty_graph_serializes_to_prefixes_only():
    assert serialize_turtle(Graph()) == ""
    out = serialize_turtle(Graph(prefixes={"ex": "http://example.org/"}))
    assert out == "@prefix ex: <http://example.org/> .\n"


def test_roundtrip_language_literal():
    g = parse_turtle(
        '@prefix dcterms: <http://purl.org/dc/terms/> .'
        ' <http://example.org/d> dcterms:title "Der Wanderer über dem Nebelmeer"@de .'
    )
    assert roundtrip(g) == g


def test_roundtrip_blank_nodes_inline():
    g = parse_turtle(
        """
        @prefix ex: <http://example.org/> .
        ex:s ex:artist [ a ex:Person ; ex:name "CDF" ] .
        """
    )
    out = serialize_turtle(g)
    assert "[" in out  # single-reference blank node is nested
    assert graph_isomorphic(g, parse_turtle(out))


def test_shared_blank_node_not_inlined():
    g = parse_turtle(
        """
        @prefix ex: <http://example.org/> .
        ex:a ex:p _:shared .
        ex:b ex:p _:shared .
        _:shared ex:name "x" .
        """
    )
    out = serialize_turtle(g)
    assert "_:shared" in out
    assert graph_isomorphic(g, parse_turtle(out))


def test_blank_node_cycle_survives():
    g = parse_turtle(
        """
        @prefix ex: <http://example.org/> .
        _:a ex:next _:b .
        _:b ex:next _:a .
        """
    )
    assert graph_isomorphic(g, roundtrip(g))


def test_serialization_is_deterministic():
    rng = random.Random(7)
    for _ in range(25):
        g = random_graph(rng)
        assert serialize_turtle(g) == serialize_turtle(Graph(g.triples, g.prefixes))


def test_numbers_roundtrip_exactly():
    g = parse_turtle("@prefix ex: <http://example.org/> . ex:s ex:p 42, 3.14, -7, 007 .")
    assert roundtrip(g) == g


def test_escapes_roundtrip():
    g = Graph(
        [
            Triple(
                Iri("http://s"),
                Iri("http://p"),
                Literal('tricky " literal\\ with\nnewline\tand control\x01'),
            )
        ]
    )
    assert roundtrip(g) == g


def test_invalid_bnode_labels_renamed_on_output():
    g = Graph([Triple(BlankNode("#0"), Iri("http://p"), Literal("x"))])
    out = serialize_turtle(g)
    assert "#0" not in out
    assert graph_isomorphic(g, parse_turtle(out))


def test_prefixed_names_used_when_local_name_valid():
    g = parse_turtle("@prefix ex: <http://example.org/> . ex:s ex:p ex:o .")
    out = serialize_turtle(g)
    assert "ex:s" in out and "<http://example.org/s>" not in out


def test_iri_with_slash_local_part_stays_full():
    g = parse_turtle("@prefix ex: <http://example.org/> . <http://example.org/policy/12345> ex:p ex:o .")
    out = serialize_turtle(g)
    assert "<http://example.org/policy/12345>" in out
    assert roundtrip(g) == g


def test_instance_fixture_roundtrips_isomorphically():
    from fairmeta import fixtures

    g = parse_turtle(fixtures.read(fixtures.INSTANCE))
    assert graph_isomorphic(g, roundtrip(g))


def test_random_graphs_roundtrip_seeded():
    rng = random.Random(20240510)
    for _ in range(100):
        g = random_graph(rng)
        assert graph_isomorphic(g, roundtrip(g))


@given(st.text(max_size=200))
@settings(max_examples=300, deadline=None)
def test_parser_never_crashes_on_arbitrary_text(text):
    try:
        parse_turtle(text)
    except TurtleSyntaxError as exc:
        assert exc.line >= 1 and exc.column >= 1


@given(st.binary(max_size=120))
@settings(max_examples=200, deadline=None)
def test_parser_never_crashes_on_decoded_bytes(data):
    text = data.decode("utf-8", errors="replace")
    try:
        parse_turtle(text)
    except TurtleSyntaxError as exc:
        assert exc.line >= 1 and exc.column >= 1
