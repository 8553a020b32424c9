"""Policy extraction from an RDF graph, and the inverse for round-trips."""

from __future__ import annotations

from ..namespaces import ODRL, RDF, XSD
from ..rdf import BlankNode, Graph, Iri, Term, Triple, term_sort_key
from .model import (
    Constraint,
    LeftOperand,
    MalformedPermissionError,
    MultiplePoliciesError,
    NoPolicyFoundError,
    Operator,
    Permission,
    Policy,
    PolicyKind,
)

_POLICY_CLASSES = {
    ODRL.Set: PolicyKind.SET,
    ODRL.Offer: PolicyKind.OFFER,
    ODRL.Agreement: PolicyKind.AGREEMENT,
    ODRL.Policy: PolicyKind.SET,
}

_LEFT_OPERANDS = {
    ODRL.spatial: LeftOperand.SPATIAL,
    ODRL.dateTime: LeftOperand.DATE_TIME,
}

_OPERATORS = {
    ODRL.eq: Operator.EQ,
    ODRL.neq: Operator.NEQ,
    ODRL.lt: Operator.LT,
    ODRL.lteq: Operator.LTEQ,
    ODRL.gt: Operator.GT,
    ODRL.gteq: Operator.GTEQ,
}

_IGNORED_RULES = (ODRL.prohibition, ODRL.obligation, ODRL.duty)


def _single_required(g: Graph, node: Term, predicate: Iri, what: str) -> Term:
    values = g.objects(node, predicate)
    if not values:
        raise MalformedPermissionError(f"{what} is missing {predicate.value.rsplit('/', 1)[-1]}")
    if len(values) > 1:
        raise MalformedPermissionError(f"{what} has more than one value for <{predicate.value}>")
    return values[0]


def _parse_constraint(g: Graph, node: Term, warnings: list[str]) -> Constraint:
    left = _single_required(g, node, ODRL.leftOperand, "constraint")
    op = _single_required(g, node, ODRL.operator, "constraint")
    right = _single_required(g, node, ODRL.rightOperand, "constraint")
    if not isinstance(left, Iri):
        raise MalformedPermissionError("constraint odrl:leftOperand must be an IRI")
    if not isinstance(op, Iri):
        raise MalformedPermissionError("constraint odrl:operator must be an IRI")
    left_kind = _LEFT_OPERANDS.get(left)
    op_kind = _OPERATORS.get(op)
    if left_kind is None:
        warnings.append(f"unknown left operand <{left.value}> preserved as raw IRI")
    if op_kind is None:
        warnings.append(f"unknown operator <{op.value}> preserved as raw IRI")
    return Constraint(
        left_operand=left_kind,
        left_operand_iri=left,
        operator=op_kind,
        operator_iri=op,
        right_operand=right,
    )


def _parse_permission(g: Graph, node: Term, warnings: list[str]) -> Permission:
    target = _single_required(g, node, ODRL.target, "permission")
    action = _single_required(g, node, ODRL.action, "permission")
    if not isinstance(target, Iri):
        raise MalformedPermissionError("permission odrl:target must be an IRI")
    if not isinstance(action, Iri):
        raise MalformedPermissionError("permission odrl:action must be an IRI")
    constraints = [
        _parse_constraint(g, c, warnings)
        for c in sorted(g.objects(node, ODRL.constraint), key=term_sort_key)
    ]
    return Permission(target=target, action=action, constraints=tuple(constraints))


def parse_policy(g: Graph) -> Policy:
    """Extract the single policy in the graph.

    Raises NoPolicyFoundError / MultiplePoliciesError / MalformedPermissionError.
    """
    candidates: list[tuple[Term, PolicyKind]] = []
    for class_iri, kind in _POLICY_CLASSES.items():
        for subject in g.subjects(RDF.type, class_iri):
            candidates.append((subject, kind))
    if not candidates:
        raise NoPolicyFoundError("no subject typed as an ODRL policy (odrl:Set / odrl:Offer / odrl:Agreement)")
    if len({s for s, _ in candidates}) > 1:
        iris = ", ".join(sorted(str(s) for s, _ in candidates))
        raise MultiplePoliciesError(f"expected exactly one policy, found: {iris}")
    subject, kind = candidates[0]
    if not isinstance(subject, Iri):
        raise MalformedPermissionError("policy identifier must be an IRI, not a blank node")

    warnings: list[str] = []
    for rule in _IGNORED_RULES:
        if g.objects(subject, rule):
            warnings.append(
                f"policy contains <{rule.value}> rules, which are outside the evaluation model and ignored"
            )
    permissions = [
        _parse_permission(g, node, warnings)
        for node in sorted(g.objects(subject, ODRL.permission), key=term_sort_key)
    ]
    return Policy(iri=subject, kind=kind, permissions=tuple(permissions), warnings=tuple(warnings))


def policy_to_graph(policy: Policy) -> Graph:
    """Render a Policy back to RDF; parse_policy(policy_to_graph(p)) round-trips."""
    triples = [Triple(policy.iri, RDF.type, ODRL.term(policy.kind.value))]
    for i, permission in enumerate(policy.permissions):
        p_node = BlankNode(f"perm{i}")
        triples.append(Triple(policy.iri, ODRL.permission, p_node))
        triples.append(Triple(p_node, ODRL.target, permission.target))
        triples.append(Triple(p_node, ODRL.action, permission.action))
        for j, constraint in enumerate(permission.constraints):
            c_node = BlankNode(f"perm{i}c{j}")
            triples.append(Triple(p_node, ODRL.constraint, c_node))
            triples.append(Triple(c_node, ODRL.leftOperand, constraint.left_operand_iri))
            triples.append(Triple(c_node, ODRL.operator, constraint.operator_iri))
            triples.append(Triple(c_node, ODRL.rightOperand, constraint.right_operand))
    return Graph(
        triples,
        prefixes={"odrl": ODRL.base, "xsd": XSD.base},
    )
