"""Read a shapes graph into a ShapeSet.

The supported constraint components are targetClass, targetNode, path,
minCount, maxCount, datatype, class, node, and nodeKind. Anything else in
the SHACL vocabulary is collected as a warning and ignored by validation,
so a generated shapes graph using an exotic feature degrades loudly but
does not fail the whole pipeline.
"""

from __future__ import annotations

from ..namespaces import RDF, SH
from ..rdf import BlankNode, Graph, Iri, Literal, Term, term_sort_key
from .model import (
    CyclicNodeReferenceError,
    MalformedShapeError,
    NodeKind,
    NodeShape,
    PropertyConstraint,
    ShapeSet,
)

MAX_NODE_DEPTH = 16

_NODE_KINDS = {
    SH.IRI: NodeKind.IRI,
    SH.BlankNode: NodeKind.BLANK_NODE,
    SH.Literal: NodeKind.LITERAL,
    SH.BlankNodeOrIRI: NodeKind.BLANK_NODE_OR_IRI,
}

_SHAPE_PREDICATES = {SH.targetClass, SH.targetNode, SH.property, RDF.type}
_CONSTRAINT_PREDICATES = {
    SH.path,
    SH.minCount,
    SH.maxCount,
    SH.datatype,
    Iri(SH.base + "class"),
    SH.node,
    SH.nodeKind,
}


def _term_label(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    assert isinstance(term, Literal)
    return repr(term.lexical)


def _integer_value(term: Term, predicate: str, where: str) -> int:
    if not isinstance(term, Literal):
        raise MalformedShapeError(f"{predicate} on {where} must be an integer literal")
    try:
        return int(term.lexical)
    except ValueError:
        raise MalformedShapeError(
            f"{predicate} on {where} must be an integer, got {term.lexical!r}"
        ) from None


def _single(values: list[Term], predicate: str, where: str, warnings: list[str]) -> Term | None:
    if not values:
        return None
    if len(values) > 1:
        rendered = ", ".join(sorted(_term_label(v) for v in values))
        warnings.append(f"{where} has {len(values)} {predicate} values ({rendered}); expected one, ignoring all")
        return None
    return values[0]


def _parse_constraint(g: Graph, node: Term, shape_label: str, warnings: list[str]) -> PropertyConstraint:
    where = f"sh:property {_term_label(node)} of shape {shape_label}"
    paths = g.objects(node, SH.path)
    if not paths:
        raise MalformedShapeError(f"{where} has no sh:path")
    if len(paths) > 1:
        raise MalformedShapeError(f"{where} has more than one sh:path")
    path = paths[0]
    if not isinstance(path, Iri):
        raise MalformedShapeError(
            f"{where}: sh:path must be a single predicate IRI (property path expressions are not supported)"
        )

    min_count = max_count = None
    values = g.objects(node, SH.minCount)
    if values:
        term = _single(values, "sh:minCount", where, warnings)
        if term is not None:
            min_count = _integer_value(term, "sh:minCount", where)
    values = g.objects(node, SH.maxCount)
    if values:
        term = _single(values, "sh:maxCount", where, warnings)
        if term is not None:
            max_count = _integer_value(term, "sh:maxCount", where)

    datatype = None
    term = _single(g.objects(node, SH.datatype), "sh:datatype", where, warnings)
    if term is not None:
        if isinstance(term, Iri):
            datatype = term
        else:
            raise MalformedShapeError(f"{where}: sh:datatype must be an IRI")

    class_ = None
    term = _single(g.objects(node, Iri(SH.base + "class")), "sh:class", where, warnings)
    if term is not None:
        if isinstance(term, Iri):
            class_ = term
        else:
            raise MalformedShapeError(f"{where}: sh:class must be an IRI")

    node_ref = None
    term = _single(g.objects(node, SH.node), "sh:node", where, warnings)
    if term is not None:
        if isinstance(term, Literal):
            raise MalformedShapeError(f"{where}: sh:node must reference a node shape")
        node_ref = term

    node_kind = None
    term = _single(g.objects(node, SH.nodeKind), "sh:nodeKind", where, warnings)
    if term is not None:
        if term in _NODE_KINDS:
            node_kind = _NODE_KINDS[term]
        else:
            warnings.append(f"{where}: unsupported sh:nodeKind {_term_label(term)}, ignoring")

    for triple in g.match(subject=node):
        if triple.predicate in _CONSTRAINT_PREDICATES:
            continue
        if triple.predicate.value.startswith(SH.base):
            warnings.append(
                f"{where}: unsupported SHACL constraint {_term_label(triple.predicate)}, ignoring"
            )

    return PropertyConstraint(
        path=path,
        min_count=min_count,
        max_count=max_count,
        datatype=datatype,
        class_=class_,
        node=node_ref,
        node_kind=node_kind,
    )


def _check_node_cycles(shapes: dict[Term, NodeShape]):
    WHITE, GRAY, BLACK = 0, 1, 2
    state = {shape_id: WHITE for shape_id in shapes}

    def visit(shape_id: Term, depth: int):
        if depth > MAX_NODE_DEPTH:
            raise CyclicNodeReferenceError(
                f"sh:node nesting exceeds the supported depth of {MAX_NODE_DEPTH}"
            )
        state[shape_id] = GRAY
        for constraint in shapes[shape_id].properties:
            ref = constraint.node
            if ref is None or ref not in shapes:
                continue
            if state[ref] == GRAY:
                raise CyclicNodeReferenceError(
                    f"sh:node reference cycle through {_term_label(ref)}"
                )
            if state[ref] == WHITE:
                visit(ref, depth + 1)
        state[shape_id] = BLACK

    for shape_id in sorted(shapes, key=term_sort_key):
        if state[shape_id] == WHITE:
            visit(shape_id, 1)


def parse_shapes(g: Graph) -> ShapeSet:
    """Extract every sh:NodeShape (plus shapes referenced via sh:node)."""
    warnings: list[str] = []
    shape_ids: set[Term] = set(g.subjects(RDF.type, SH.NodeShape))
    for triple in g.match(predicate=SH.node):
        if not isinstance(triple.object, Literal):
            shape_ids.add(triple.object)

    shapes: dict[Term, NodeShape] = {}
    for shape_id in sorted(shape_ids, key=term_sort_key):
        label = _term_label(shape_id)
        target_class = None
        term = _single(g.objects(shape_id, SH.targetClass), "sh:targetClass", f"shape {label}", warnings)
        if term is not None:
            if not isinstance(term, Iri):
                raise MalformedShapeError(f"shape {label}: sh:targetClass must be an IRI")
            target_class = term

        target_nodes = []
        for term in g.objects(shape_id, SH.targetNode):
            if isinstance(term, Iri):
                target_nodes.append(term)
            else:
                warnings.append(f"shape {label}: sh:targetNode {_term_label(term)} is not an IRI, ignoring")
        target_nodes.sort(key=term_sort_key)

        constraints = []
        for prop_node in sorted(g.objects(shape_id, SH.property), key=term_sort_key):
            if isinstance(prop_node, Literal):
                raise MalformedShapeError(f"shape {label}: sh:property must point at a constraint node")
            constraints.append(_parse_constraint(g, prop_node, label, warnings))
        constraints.sort(key=lambda c: term_sort_key(c.path))

        for triple in g.match(subject=shape_id):
            if triple.predicate in _SHAPE_PREDICATES:
                continue
            if triple.predicate.value.startswith(SH.base):
                warnings.append(
                    f"shape {label}: unsupported SHACL construct {_term_label(triple.predicate)}, ignoring"
                )

        shapes[shape_id] = NodeShape(
            id=shape_id,
            target_class=target_class,
            target_nodes=tuple(target_nodes),
            properties=tuple(constraints),
        )

    _check_node_cycles(shapes)
    ordered = tuple(shapes[shape_id] for shape_id in sorted(shapes, key=term_sort_key))
    return ShapeSet(shapes=ordered, source=g, warnings=tuple(warnings))
