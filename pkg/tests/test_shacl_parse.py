import pytest

from fairmeta import fixtures
from fairmeta.namespaces import DCAT, DCTERMS, GNDO, ODRL
from fairmeta.rdf import Graph, Iri, parse_turtle
from fairmeta.shacl import (
    CyclicNodeReferenceError,
    MalformedShapeError,
    NodeKind,
    parse_shapes,
)

SH_PREFIX = "@prefix sh: <http://www.w3.org/ns/shacl#> .\n@prefix ex: <http://example.org/> .\n"


def load(path) -> Graph:
    return parse_turtle(fixtures.read(path))


def test_base_shapes_parse_to_two_shapes():
    shapes = parse_shapes(load(fixtures.BASE_SHAPES))
    assert len(shapes.shapes) == 2
    by_path = {c.path: c for s in shapes.shapes for c in s.properties}
    assert by_path[DCTERMS.title].min_count == 1
    assert by_path[ODRL.hasPolicy].min_count == 1
    assert by_path[DCTERMS.title].node_kind == NodeKind.LITERAL
    assert by_path[ODRL.hasPolicy].node_kind == NodeKind.IRI
    assert all(s.target_class == DCAT.Dataset for s in shapes.shapes)
    assert shapes.warnings == ()


def test_empty_graph_gives_empty_shapeset():
    shapes = parse_shapes(Graph())
    assert shapes.shapes == ()


def test_property_without_path_is_malformed():
    with pytest.raises(MalformedShapeError) as exc:
        parse_shapes(parse_turtle(SH_PREFIX + "ex:S a sh:NodeShape ; sh:property [ sh:minCount 1 ] ."))
    assert "sh:path" in str(exc.value)


def test_min_greater_than_max_is_malformed():
    with pytest.raises(MalformedShapeError):
        parse_shapes(
            parse_turtle(
                SH_PREFIX + "ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount 3 ; sh:maxCount 1 ] ."
            )
        )


def test_non_integer_count_is_malformed():
    with pytest.raises(MalformedShapeError):
        parse_shapes(
            parse_turtle(SH_PREFIX + 'ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount "often" ] .')
        )


def test_node_cycle_detected():
    text = SH_PREFIX + (
        "ex:A a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:node ex:B ] .\n"
        "ex:B a sh:NodeShape ; sh:property [ sh:path ex:q ; sh:node ex:A ] .\n"
    )
    with pytest.raises(CyclicNodeReferenceError):
        parse_shapes(parse_turtle(text))


def test_unknown_shacl_vocabulary_becomes_warning():
    text = SH_PREFIX + 'ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:pattern "^x" ] .'
    shapes = parse_shapes(parse_turtle(text))
    assert len(shapes.warnings) == 1
    assert "sh:pattern" in shapes.warnings[0] or "pattern" in shapes.warnings[0]


def test_faulty_fixture_datatype_alternative_warned_and_dropped():
    shapes = parse_shapes(load(fixtures.FAULTY_SHAPES))
    painting = shapes.by_id(Iri("http://example.org/shapes/PaintingShape"))
    date_constraint = next(c for c in painting.properties if c.path == GNDO.dateOfProduction)
    assert date_constraint.datatype is None
    assert any("sh:datatype" in w for w in shapes.warnings)


def test_shape_referenced_only_via_node_is_included():
    shapes = parse_shapes(load(fixtures.CORRECTED_SHAPES))
    person = shapes.by_id(Iri("http://example.org/shapes/PersonShape"))
    assert person is not None
    assert not person.has_targets
    painting = shapes.by_id(Iri("http://example.org/shapes/PaintingShape"))
    artist = next(c for c in painting.properties if c.path == GNDO.firstArtist)
    assert artist.node == person.id
    assert artist.class_ == GNDO.DifferentiatedPerson


def test_roundtrip_through_serialization():
    from fairmeta.rdf import serialize_turtle

    shapes = parse_shapes(load(fixtures.CORRECTED_SHAPES))
    reparsed = parse_shapes(parse_turtle(serialize_turtle(shapes.source)))
    assert [s.target_class for s in reparsed.shapes] == [s.target_class for s in shapes.shapes]
    a = [(c.path, c.min_count, c.max_count, c.datatype, c.class_, c.node_kind) for s in shapes.shapes for c in s.properties]
    b = [(c.path, c.min_count, c.max_count, c.datatype, c.class_, c.node_kind) for s in reparsed.shapes for c in s.properties]
    assert a == b
