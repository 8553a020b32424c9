"""SHACL-subset engine: shape parsing, validation, diffing, diagram export."""

from .delta import ConstraintChange, ConstraintDiff, ShapeDelta, shape_delta
from .diagram import export_diagram
from .model import (
    ConstraintKind,
    CyclicNodeReferenceError,
    MalformedShapeError,
    NodeKind,
    NodeShape,
    PropertyConstraint,
    ShaclError,
    ShapeSet,
    ValidationReport,
    Violation,
)
from .parse import parse_shapes
from .validate import validate

__all__ = [
    "ConstraintChange",
    "ConstraintDiff",
    "ConstraintKind",
    "CyclicNodeReferenceError",
    "MalformedShapeError",
    "NodeKind",
    "NodeShape",
    "PropertyConstraint",
    "ShaclError",
    "ShapeDelta",
    "ShapeSet",
    "ValidationReport",
    "Violation",
    "export_diagram",
    "parse_shapes",
    "shape_delta",
    "validate",
]
