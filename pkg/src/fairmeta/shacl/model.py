"""Shape model and validation report types."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..rdf import BlankNode, Graph, Iri, Term


class ShaclError(Exception):
    """Base class for shape parsing errors."""


class MalformedShapeError(ShaclError):
    pass


class CyclicNodeReferenceError(ShaclError):
    pass


class NodeKind(enum.Enum):
    IRI = "IRI"
    BLANK_NODE = "BlankNode"
    LITERAL = "Literal"
    BLANK_NODE_OR_IRI = "BlankNodeOrIRI"


class ConstraintKind(enum.Enum):
    MIN_COUNT = "MinCount"
    MAX_COUNT = "MaxCount"
    DATATYPE = "Datatype"
    CLASS = "Class"
    NODE = "Node"
    NODE_KIND = "NodeKind"


@dataclass(frozen=True)
class PropertyConstraint:
    path: Iri
    min_count: int | None = None
    max_count: int | None = None
    datatype: Iri | None = None
    class_: Iri | None = None
    node: Iri | BlankNode | None = None  # id of the referenced NodeShape
    node_kind: NodeKind | None = None

    def __post_init__(self):
        if self.min_count is not None and self.min_count < 0:
            raise MalformedShapeError(f"sh:minCount must be non-negative, got {self.min_count}")
        if self.max_count is not None and self.max_count < 0:
            raise MalformedShapeError(f"sh:maxCount must be non-negative, got {self.max_count}")
        if self.min_count is not None and self.max_count is not None and self.min_count > self.max_count:
            raise MalformedShapeError(
                f"sh:minCount {self.min_count} exceeds sh:maxCount {self.max_count} on path <{self.path.value}>"
            )


@dataclass(frozen=True)
class NodeShape:
    id: Iri | BlankNode
    target_class: Iri | None = None
    target_nodes: tuple[Iri, ...] = ()
    properties: tuple[PropertyConstraint, ...] = ()

    @property
    def has_targets(self) -> bool:
        return self.target_class is not None or bool(self.target_nodes)


@dataclass(frozen=True)
class ShapeSet:
    shapes: tuple[NodeShape, ...]
    source: Graph
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        ids = [s.id for s in self.shapes]
        if len(ids) != len(set(ids)):
            raise MalformedShapeError("duplicate node shape identifiers in shape set")

    def by_id(self, shape_id: Iri | BlankNode) -> NodeShape | None:
        for shape in self.shapes:
            if shape.id == shape_id:
                return shape
        return None


@dataclass(frozen=True)
class Violation:
    focus_node: Term
    path: Iri
    constraint: ConstraintKind
    message: str
    value: Term | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def conforms(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [v.message for v in self.violations]
