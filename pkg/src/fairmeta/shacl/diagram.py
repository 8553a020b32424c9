"""Deterministic PlantUML class-diagram export of a ShapeSet.

One class block per node shape, one attribute line per property
constraint (``path : datatype [min..max]``), one association per shape
reference. The output is stable for a given ShapeSet, which makes it
snapshot-testable and diffable.
"""

from __future__ import annotations

from ..rdf import BlankNode, Iri, Term
from .model import NodeShape, PropertyConstraint, ShapeSet


def _display_name(term: Term, prefixes: dict[str, str]) -> str:
    if isinstance(term, BlankNode):
        return f"_{term.label}"
    assert isinstance(term, Iri)
    value = term.value
    for label, namespace in sorted(prefixes.items()):
        if value.startswith(namespace) and len(value) > len(namespace):
            return f"{label}:{value[len(namespace):]}"
    for sep in ("#", "/"):
        if sep in value:
            tail = value.rsplit(sep, 1)[1]
            if tail:
                return tail
    return value


def _class_name(shape: NodeShape, prefixes: dict[str, str]) -> str:
    if isinstance(shape.id, Iri):
        name = _display_name(shape.id, prefixes)
        return name.split(":", 1)[1] if ":" in name else name
    return f"AnonymousShape_{shape.id.label}"


def _cardinality(c: PropertyConstraint) -> str:
    low = c.min_count if c.min_count is not None else 0
    high = str(c.max_count) if c.max_count is not None else "*"
    return f"[{low}..{high}]"


def _attribute_type(c: PropertyConstraint, prefixes: dict[str, str]) -> str:
    if c.datatype is not None:
        return _display_name(c.datatype, prefixes)
    if c.class_ is not None:
        return _display_name(c.class_, prefixes)
    if c.node_kind is not None:
        return c.node_kind.value
    return "any"


def export_diagram(shapes: ShapeSet) -> str:
    """Render the shape set as PlantUML class-diagram text."""
    prefixes = shapes.source.prefixes
    names = {shape.id: _class_name(shape, prefixes) for shape in shapes.shapes}
    lines = ["@startuml"]
    edges: list[str] = []
    for shape in shapes.shapes:
        name = names[shape.id]
        header = f'class "{name}"'
        if shape.target_class is not None:
            header += f" <<{_display_name(shape.target_class, prefixes)}>>"
        lines.append(header + " {")
        for c in shape.properties:
            path = _display_name(c.path, prefixes)
            if c.node is not None and c.node in names:
                edges.append(f'"{name}" --> "{names[c.node]}" : {path}')
                continue
            lines.append(f"  {path} : {_attribute_type(c, prefixes)} {_cardinality(c)}")
        lines.append("}")
    lines.extend(sorted(edges))
    lines.append("@enduml")
    return "\n".join(lines) + "\n"
