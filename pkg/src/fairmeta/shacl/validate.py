"""SHACL-core validation of a data graph against a ShapeSet.

Problems never raise; they become report entries whose messages are
written for the repair loop (full IRIs, counts, expected vs found).
"""

from __future__ import annotations

from ..namespaces import RDF
from ..rdf import BlankNode, Graph, Iri, Literal, Term, UnsupportedDatatypeError, term_sort_key, validate_literal
from .model import (
    ConstraintKind,
    CyclicNodeReferenceError,
    NodeKind,
    NodeShape,
    PropertyConstraint,
    ShapeSet,
    ValidationReport,
    Violation,
)
from .parse import MAX_NODE_DEPTH


def _label(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"blank node _:{term.label}"
    assert isinstance(term, Literal)
    return f'"{term.lexical}"'


def _check_datatype(
    focus: Term, constraint: PropertyConstraint, value: Term, out: list[Violation]
):
    datatype = constraint.datatype
    assert datatype is not None
    path = constraint.path
    if not isinstance(value, Literal):
        out.append(
            Violation(
                focus,
                path,
                ConstraintKind.DATATYPE,
                f"value {_label(value)} of <{path.value}> must be a literal of type <{datatype.value}>, "
                f"not an IRI or blank node",
                value,
            )
        )
        return
    if value.datatype != datatype.value:
        out.append(
            Violation(
                focus,
                path,
                ConstraintKind.DATATYPE,
                f"value {_label(value)} of <{path.value}> has datatype <{value.datatype}>, "
                f"expected <{datatype.value}>",
                value,
            )
        )
        return
    try:
        ok = validate_literal(value.lexical, datatype.value)
    except UnsupportedDatatypeError:
        return  # outside the supported lexical checks: pass with no entry
    if not ok:
        out.append(
            Violation(
                focus,
                path,
                ConstraintKind.DATATYPE,
                f'"{value.lexical}" is not a valid <{datatype.value}> lexical form',
                value,
            )
        )


class _Validator:
    def __init__(self, data: Graph, shapes: ShapeSet):
        self.data = data
        self.shapes = shapes
        self.violations: list[Violation] = []

    def run(self) -> ValidationReport:
        for shape in self.shapes.shapes:
            for focus in self._focus_nodes(shape):
                self._check_node(focus, shape, depth=1)
        unique = sorted(
            set(self.violations),
            key=lambda v: (term_sort_key(v.focus_node), term_sort_key(v.path), v.constraint.value, v.message),
        )
        return ValidationReport(violations=tuple(unique))

    def _focus_nodes(self, shape: NodeShape) -> list[Term]:
        nodes: list[Term] = list(shape.target_nodes)
        if shape.target_class is not None:
            nodes.extend(self.data.subjects(RDF.type, shape.target_class))
        seen: set[Term] = set()
        ordered = []
        for node in sorted(nodes, key=term_sort_key):
            if node not in seen:
                seen.add(node)
                ordered.append(node)
        return ordered

    def _check_node(self, focus: Term, shape: NodeShape, depth: int) -> bool:
        """Validate focus against shape; returns True when it conforms."""
        if depth > MAX_NODE_DEPTH:
            raise CyclicNodeReferenceError(
                f"sh:node recursion exceeded depth {MAX_NODE_DEPTH} while validating {_label(focus)}"
            )
        before = len(self.violations)
        for constraint in shape.properties:
            self._check_property(focus, constraint, depth)
        return len(self.violations) == before

    def _check_property(self, focus: Term, constraint: PropertyConstraint, depth: int):
        path = constraint.path
        # a literal focus (e.g. from sh:node on a literal value) has no
        # outgoing edges, so required paths correctly fail below
        values = sorted(self.data.objects(focus, path), key=term_sort_key)
        count = len(values)
        if constraint.min_count is not None and count < constraint.min_count:
            self.violations.append(
                Violation(
                    focus,
                    path,
                    ConstraintKind.MIN_COUNT,
                    f"{_label(focus)} needs at least {constraint.min_count} value(s) of <{path.value}>, found {count}",
                )
            )
        if constraint.max_count is not None and count > constraint.max_count:
            self.violations.append(
                Violation(
                    focus,
                    path,
                    ConstraintKind.MAX_COUNT,
                    f"{_label(focus)} allows at most {constraint.max_count} value(s) of <{path.value}>, found {count}",
                )
            )
        for value in values:
            if constraint.datatype is not None:
                _check_datatype(focus, constraint, value, self.violations)
            if constraint.class_ is not None:
                self._check_class(focus, constraint, value)
            if constraint.node_kind is not None:
                self._check_node_kind(focus, constraint, value)
            if constraint.node is not None:
                self._check_node_ref(focus, constraint, value, depth)

    def _check_class(self, focus: Term, constraint: PropertyConstraint, value: Term):
        class_ = constraint.class_
        assert class_ is not None
        conforming = (
            isinstance(value, (Iri, BlankNode))
            and value in self.data.subjects(RDF.type, class_)
        )
        if not conforming:
            self.violations.append(
                Violation(
                    focus,
                    constraint.path,
                    ConstraintKind.CLASS,
                    f"value {_label(value)} of <{constraint.path.value}> must be an instance of <{class_.value}> "
                    f"(rdf:type triple missing)",
                    value,
                )
            )

    def _check_node_kind(self, focus: Term, constraint: PropertyConstraint, value: Term):
        kind = constraint.node_kind
        assert kind is not None
        ok = {
            NodeKind.IRI: isinstance(value, Iri),
            NodeKind.BLANK_NODE: isinstance(value, BlankNode),
            NodeKind.LITERAL: isinstance(value, Literal),
            NodeKind.BLANK_NODE_OR_IRI: isinstance(value, (BlankNode, Iri)),
        }[kind]
        if not ok:
            self.violations.append(
                Violation(
                    focus,
                    constraint.path,
                    ConstraintKind.NODE_KIND,
                    f"value {_label(value)} of <{constraint.path.value}> must be a {kind.value}",
                    value,
                )
            )

    def _check_node_ref(self, focus: Term, constraint: PropertyConstraint, value: Term, depth: int):
        ref = constraint.node
        assert ref is not None
        shape = self.shapes.by_id(ref)
        if shape is None:
            return  # dangling reference was already warned about at parse time
        if not self._check_node(value, shape, depth + 1):
            self.violations.append(
                Violation(
                    focus,
                    constraint.path,
                    ConstraintKind.NODE,
                    f"value {_label(value)} of <{constraint.path.value}> does not conform to shape {_label(shape.id)}",
                    value,
                )
            )


def validate(data: Graph, shapes: ShapeSet) -> ValidationReport:
    """Validate a data graph; deterministic, never raises on data problems."""
    return _Validator(data, shapes).run()
