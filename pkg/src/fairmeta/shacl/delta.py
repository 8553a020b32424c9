"""Structural diff between two shape sets, at constraint granularity.

Backs the schema-monotonicity check and the UI diff pane: the curator
sees exactly which per-path constraints an LLM edit added, dropped, or
changed before deciding whether to accept it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..rdf import BlankNode, Iri
from .model import NodeShape, PropertyConstraint, ShapeSet

_FIELDS = ("min_count", "max_count", "datatype", "class_", "node", "node_kind")


def _shape_key(shape: NodeShape) -> str:
    if isinstance(shape.id, Iri):
        return shape.id.value
    if shape.target_class is not None:
        return f"anonymous shape targeting {shape.target_class.value}"
    return f"anonymous shape _:{shape.id.label}"


def _render(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, Iri):
        return value.value
    if isinstance(value, BlankNode):
        return f"_:{value.label}"
    if hasattr(value, "value"):  # enums
        return value.value
    return str(value)


def _constraint_summary(c: PropertyConstraint) -> dict[str, str]:
    out = {}
    for name in _FIELDS:
        rendered = _render(getattr(c, name))
        if rendered is not None:
            out[name.rstrip("_")] = rendered
    return out


@dataclass(frozen=True)
class ConstraintDiff:
    shape: str
    path: str
    details: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"shape": self.shape, "path": self.path, "details": dict(self.details)}


@dataclass(frozen=True)
class ConstraintChange:
    shape: str
    path: str
    field: str
    old: str | None
    new: str | None

    def to_dict(self) -> dict:
        return {"shape": self.shape, "path": self.path, "field": self.field, "old": self.old, "new": self.new}


@dataclass(frozen=True)
class ShapeDelta:
    added_shapes: tuple[str, ...] = ()
    removed_shapes: tuple[str, ...] = ()
    added: tuple[ConstraintDiff, ...] = ()
    removed: tuple[ConstraintDiff, ...] = ()
    changed: tuple[ConstraintChange, ...] = ()

    @property
    def empty(self) -> bool:
        return not (self.added_shapes or self.removed_shapes or self.added or self.removed or self.changed)

    def to_dict(self) -> dict:
        return {
            "added_shapes": list(self.added_shapes),
            "removed_shapes": list(self.removed_shapes),
            "added": [d.to_dict() for d in self.added],
            "removed": [d.to_dict() for d in self.removed],
            "changed": [c.to_dict() for c in self.changed],
        }


def _constraints_by_path(shape: NodeShape) -> dict[str, list[PropertyConstraint]]:
    out: dict[str, list[PropertyConstraint]] = {}
    for c in shape.properties:
        out.setdefault(c.path.value, []).append(c)
    return out


def shape_delta(old: ShapeSet, new: ShapeSet) -> ShapeDelta:
    old_shapes = {_shape_key(s): s for s in old.shapes}
    new_shapes = {_shape_key(s): s for s in new.shapes}

    added_shapes = tuple(sorted(set(new_shapes) - set(old_shapes)))
    removed_shapes = tuple(sorted(set(old_shapes) - set(new_shapes)))
    added: list[ConstraintDiff] = []
    removed: list[ConstraintDiff] = []
    changed: list[ConstraintChange] = []

    for key in added_shapes:
        for c in new_shapes[key].properties:
            added.append(ConstraintDiff(key, c.path.value, _constraint_summary(c)))
    for key in removed_shapes:
        for c in old_shapes[key].properties:
            removed.append(ConstraintDiff(key, c.path.value, _constraint_summary(c)))

    for key in sorted(set(old_shapes) & set(new_shapes)):
        o, n = old_shapes[key], new_shapes[key]
        if o.target_class != n.target_class:
            changed.append(
                ConstraintChange(key, "", "targetClass", _render(o.target_class), _render(n.target_class))
            )
        if o.target_nodes != n.target_nodes:
            changed.append(
                ConstraintChange(
                    key,
                    "",
                    "targetNode",
                    ", ".join(t.value for t in o.target_nodes) or None,
                    ", ".join(t.value for t in n.target_nodes) or None,
                )
            )
        o_paths = _constraints_by_path(o)
        n_paths = _constraints_by_path(n)
        for path in sorted(set(n_paths) - set(o_paths)):
            for c in n_paths[path]:
                added.append(ConstraintDiff(key, path, _constraint_summary(c)))
        for path in sorted(set(o_paths) - set(n_paths)):
            for c in o_paths[path]:
                removed.append(ConstraintDiff(key, path, _constraint_summary(c)))
        for path in sorted(set(o_paths) & set(n_paths)):
            o_cs, n_cs = o_paths[path], n_paths[path]
            if len(o_cs) == len(n_cs) == 1:
                for name in _FIELDS:
                    ov, nv = getattr(o_cs[0], name), getattr(n_cs[0], name)
                    if ov != nv:
                        changed.append(
                            ConstraintChange(key, path, name.rstrip("_"), _render(ov), _render(nv))
                        )
            else:
                o_sum = sorted(str(_constraint_summary(c)) for c in o_cs)
                n_sum = sorted(str(_constraint_summary(c)) for c in n_cs)
                if o_sum != n_sum:
                    changed.append(
                        ConstraintChange(key, path, "constraints", "; ".join(o_sum), "; ".join(n_sum))
                    )

    added.sort(key=lambda d: (d.shape, d.path))
    removed.sort(key=lambda d: (d.shape, d.path))
    changed.sort(key=lambda c: (c.shape, c.path, c.field))
    return ShapeDelta(
        added_shapes=added_shapes,
        removed_shapes=removed_shapes,
        added=tuple(added),
        removed=tuple(removed),
        changed=tuple(changed),
    )
