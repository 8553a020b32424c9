"""Validators for the curator tasks.

Each validator maps a parsed Graph to a list of finding strings; findings
are quoted verbatim into the correction prompt, so they name IRIs in full
and say what to change.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Callable, Iterable

from ..namespaces import GNDO, SH
from ..odrl import FindingLevel, PolicyError, parse_policy, wellformed
from ..rdf import BlankNode, Graph, Iri, Literal, Term, Triple, graph_subsumes, triple_sort_key
from ..shacl import ShaclError, ShapeSet, parse_shapes, validate
from .repair import Validator


def _render_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    assert isinstance(term, Literal)
    return f'"{term.lexical}"'


def _render_triple(t: Triple) -> str:
    return f"{_render_term(t.subject)} {_render_term(t.predicate)} {_render_term(t.object)}"


@dataclass(frozen=True)
class SchemaRules:
    """Domain facts the schema must respect (used to auto-detect defects).

    allowed_property_paths: when set, any sh:path outside it is flagged.
    required_datatypes: path IRI -> the exact datatype its constraint must declare.
    """

    allowed_property_paths: frozenset[str] | None = None
    required_datatypes: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "SchemaRules":
        allowed = data.get("allowed_property_paths")
        return cls(
            allowed_property_paths=frozenset(allowed) if allowed is not None else None,
            required_datatypes=dict(data.get("required_datatypes", {})),
        )


def schema_validator(base: ShapeSet | None, rules: SchemaRules | None = None) -> Validator:
    """Well-formedness + monotonicity against the base + domain rules."""

    def check(graph: Graph) -> list[str]:
        findings: list[str] = []
        try:
            parse_shapes(graph)
        except ShaclError as exc:
            return [f"the shapes graph is not well-formed: {exc}"]
        if base is not None:
            result = graph_subsumes(base.source, graph)
            if not result.holds:
                for triple in sorted(result.witness.removed, key=triple_sort_key):
                    findings.append(
                        f"the existing shapes must not be changed, but this triple is missing: "
                        f"{_render_triple(triple)}"
                    )
        if rules is not None:
            findings.extend(_check_rules(graph, rules))
        return findings

    return check


def _check_rules(graph: Graph, rules: SchemaRules) -> list[str]:
    findings = []
    constraint_nodes = {t.subject: t.object for t in graph.match(predicate=SH.path)}
    if rules.allowed_property_paths is not None:
        for node in sorted(constraint_nodes, key=lambda n: str(constraint_nodes[n])):
            path = constraint_nodes[node]
            if isinstance(path, Iri) and path.value not in rules.allowed_property_paths:
                findings.append(
                    f"the schema must not constrain <{path.value}>; remove this property constraint"
                )
    for path_iri, datatype_iri in sorted(rules.required_datatypes.items()):
        for node, path in sorted(constraint_nodes.items(), key=lambda kv: str(kv[1])):
            if not (isinstance(path, Iri) and path.value == path_iri):
                continue
            declared = {o.value for o in graph.objects(node, SH.datatype) if isinstance(o, Iri)}
            if declared != {datatype_iri}:
                found = ", ".join(f"<{d}>" for d in sorted(declared)) or "none"
                findings.append(
                    f"the constraint on <{path_iri}> must declare sh:datatype <{datatype_iri}> "
                    f"and nothing else (found: {found})"
                )
    return findings


def instance_validator(shapes: ShapeSet, observed_pids: Callable[[], Iterable[str]]) -> Validator:
    """SHACL conformance plus the unverified-PID check.

    A gndo:gndIdentifier literal that the lookup tool never returned in
    this session is flagged as a possible hallucinated identifier.
    """

    def check(graph: Graph) -> list[str]:
        report = validate(graph, shapes)
        findings = list(report.messages())
        known = set(observed_pids())
        for triple in sorted(graph.match(predicate=GNDO.gndIdentifier), key=triple_sort_key):
            if isinstance(triple.object, Literal) and triple.object.lexical not in known:
                findings.append(
                    f'the identifier "{triple.object.lexical}" was not returned by the '
                    f"lookup_gnd_id tool in this session; use the tool result instead of "
                    f"inventing an identifier"
                )
        return findings

    return check


def policy_validator(expected_iri: Iri, now: datetime | None = None) -> Validator:
    """Parseability, well-formedness (errors only), and IRI preservation."""

    def check(graph: Graph) -> list[str]:
        try:
            policy = parse_policy(graph)
        except PolicyError as exc:
            return [f"the policy is not well-formed: {exc}"]
        findings = [
            finding.message
            for finding in wellformed(policy, now=now)
            if finding.level is FindingLevel.ERROR
        ]
        if policy.iri != expected_iri:
            findings.append(
                f"the policy IRI must be <{expected_iri.value}> (the instance's odrl:hasPolicy "
                f"reference), found <{policy.iri.value}>"
            )
        return findings

    return check
