import pytest

from fairmeta import fixtures
from fairmeta.namespaces import DCTERMS, GNDO, ODRL, XSD
from fairmeta.rdf import BlankNode, Graph, Iri, Literal, Triple, parse_turtle
from fairmeta.shacl import ConstraintKind, parse_shapes, validate


@pytest.fixture(scope="module")
def corrected_shapes():
    return parse_shapes(parse_turtle(fixtures.read(fixtures.CORRECTED_SHAPES)))


@pytest.fixture()
def instance():
    return parse_turtle(fixtures.read(fixtures.INSTANCE))


def test_instance_conforms_to_corrected_shapes(corrected_shapes, instance):
    report = validate(instance, corrected_shapes)
    assert report.conforms, report.messages()


def test_removing_title_yields_min_count_violation(corrected_shapes, instance):
    mutated = instance.without_triples(instance.match(predicate=DCTERMS.title))
    report = validate(mutated, corrected_shapes)
    assert not report.conforms
    violations = [v for v in report.violations if v.path == DCTERMS.title]
    assert len(violations) == 1
    assert violations[0].constraint == ConstraintKind.MIN_COUNT


def test_string_typed_date_yields_datatype_violation(corrected_shapes, instance):
    (old,) = instance.match(predicate=GNDO.dateOfProduction)
    mutated = instance.without_triples([old]).with_triples(
        [Triple(old.subject, old.predicate, Literal(old.object.lexical))]
    )
    report = validate(mutated, corrected_shapes)
    datatype_violations = [v for v in report.violations if v.constraint == ConstraintKind.DATATYPE]
    assert len(datatype_violations) == 1
    assert datatype_violations[0].path == GNDO.dateOfProduction


def test_invalid_datetime_lexical_flagged(corrected_shapes, instance):
    (old,) = instance.match(predicate=GNDO.dateOfProduction)
    bad = Literal("1818", datatype=str(XSD) + "dateTime")
    mutated = instance.without_triples([old]).with_triples([Triple(old.subject, old.predicate, bad)])
    report = validate(mutated, corrected_shapes)
    assert any(v.constraint == ConstraintKind.DATATYPE and "lexical" in v.message for v in report.violations)


def test_nested_shape_violation_names_nested_path(corrected_shapes, instance):
    mutated = instance.without_triples(instance.match(predicate=GNDO.gndIdentifier))
    report = validate(mutated, corrected_shapes)
    paths = {v.path for v in report.violations}
    assert GNDO.gndIdentifier in paths  # nested MinCount inside PersonShape
    assert GNDO.firstArtist in paths  # outer sh:node violation
    kinds = {v.constraint for v in report.violations}
    assert ConstraintKind.NODE in kinds and ConstraintKind.MIN_COUNT in kinds


def test_class_violation_when_type_triple_missing(corrected_shapes, instance):
    mutated = instance.without_triples(
        [t for t in instance.match(predicate=Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")) if isinstance(t.subject, BlankNode)]
    )
    report = validate(mutated, corrected_shapes)
    assert any(v.constraint == ConstraintKind.CLASS for v in report.violations)


def test_node_kind_violation(corrected_shapes, instance):
    (old,) = instance.match(predicate=ODRL.hasPolicy)
    mutated = instance.without_triples([old]).with_triples(
        [Triple(old.subject, old.predicate, Literal("not an IRI"))]
    )
    report = validate(mutated, corrected_shapes)
    assert any(v.constraint == ConstraintKind.NODE_KIND for v in report.violations)


def test_max_count_violation(corrected_shapes, instance):
    artist = next(t.object for t in instance.match(predicate=GNDO.firstArtist))
    mutated = instance.with_triples([Triple(artist, GNDO.gndIdentifier, Literal("999999"))])
    report = validate(mutated, corrected_shapes)
    assert any(v.constraint == ConstraintKind.MAX_COUNT and v.path == GNDO.gndIdentifier for v in report.violations)


def test_unrelated_triples_do_not_affect_conformance(corrected_shapes, instance):
    extra = [
        Triple(Iri("http://example.org/other"), Iri("http://example.org/p"), Literal("x")),
        Triple(BlankNode("unrelated"), Iri("http://example.org/q"), Iri("http://example.org/other")),
    ]
    report = validate(instance.with_triples(extra), corrected_shapes)
    assert report.conforms


def test_validation_is_deterministic(corrected_shapes, instance):
    mutated = instance.without_triples(instance.match(predicate=DCTERMS.title) + instance.match(predicate=GNDO.gndIdentifier))
    r1 = validate(mutated, corrected_shapes)
    r2 = validate(Graph(mutated.triples, {}), corrected_shapes)
    assert r1.violations == r2.violations


def test_shape_without_targets_matches_nothing():
    shapes = parse_shapes(
        parse_turtle(
            "@prefix sh: <http://www.w3.org/ns/shacl#> .\n@prefix ex: <http://example.org/> .\n"
            "ex:S a sh:NodeShape ; sh:property [ sh:path ex:p ; sh:minCount 1 ] ."
        )
    )
    data = parse_turtle("@prefix ex: <http://example.org/> . ex:x ex:unrelated ex:y .")
    assert validate(data, shapes).conforms


def test_target_node_validation():
    shapes = parse_shapes(
        parse_turtle(
            "@prefix sh: <http://www.w3.org/ns/shacl#> .\n@prefix ex: <http://example.org/> .\n"
            "ex:S a sh:NodeShape ; sh:targetNode ex:x ; sh:property [ sh:path ex:p ; sh:minCount 1 ] ."
        )
    )
    missing = parse_turtle("@prefix ex: <http://example.org/> . ex:x ex:q ex:y .")
    present = parse_turtle("@prefix ex: <http://example.org/> . ex:x ex:p ex:y .")
    assert not validate(missing, shapes).conforms
    assert validate(present, shapes).conforms
