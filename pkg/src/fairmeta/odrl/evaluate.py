"""Permit/deny evaluation and policy well-formedness checks.

Evaluation is fail-closed: a constraint the engine cannot interpret never
grants usage. "Now" is always an input, never read from a clock, so every
decision is reproducible.
"""

from __future__ import annotations

from datetime import datetime

from ..rdf import Iri, Literal, parse_datetime
from .model import (
    Constraint,
    Decision,
    EQUALITY_OPERATORS,
    Finding,
    FindingLevel,
    LeftOperand,
    Operator,
    ORDERING_OPERATORS,
    Outcome,
    Permission,
    Policy,
    UsageContext,
)

_COMPARATORS = {
    Operator.LT: lambda a, b: a < b,
    Operator.LTEQ: lambda a, b: a <= b,
    Operator.GT: lambda a, b: a > b,
    Operator.GTEQ: lambda a, b: a >= b,
}


def _constraint_holds(constraint: Constraint, ctx: UsageContext) -> tuple[bool | None, str]:
    """(holds, reason); holds is None when the constraint is not interpretable."""
    left = constraint.left_operand
    op = constraint.operator
    operand = constraint.right_operand
    if left is None or op is None:
        return None, (
            f"unsupported constraint <{constraint.left_operand_iri.value}> "
            f"<{constraint.operator_iri.value}>: denying (fail-closed)"
        )
    if left is LeftOperand.SPATIAL:
        if op not in EQUALITY_OPERATORS or not isinstance(operand, Literal):
            return None, "unsupported constraint: spatial must compare equality against a country string"
        expected = operand.lexical
        holds = (ctx.country == expected) if op is Operator.EQ else (ctx.country != expected)
        detail = f"spatial constraint ({op.value} \"{expected}\") vs country {ctx.country}"
        return holds, f"{detail}: {'satisfied' if holds else 'failed'}"
    assert left is LeftOperand.DATE_TIME
    if op not in ORDERING_OPERATORS or not isinstance(operand, Literal):
        return None, "unsupported constraint: dateTime must use an ordering operator and a dateTime operand"
    try:
        bound = parse_datetime(operand.lexical)
    except ValueError:
        return None, f"unsupported constraint: {operand.lexical!r} is not a valid xsd:dateTime"
    holds = _COMPARATORS[op](ctx.timestamp, bound)
    detail = f"dateTime constraint ({op.value} {operand.lexical}) vs timestamp {ctx.timestamp.isoformat()}"
    return holds, f"{detail}: {'satisfied' if holds else 'failed'}"


def evaluate(policy: Policy, ctx: UsageContext, target: Iri | None = None) -> Decision:
    """Evaluate a usage request; a bare context leaves the target unbound."""
    matching = [
        p
        for p in policy.permissions
        if p.action == ctx.action and (target is None or p.target == target)
    ]
    if not matching:
        return Decision(
            Outcome.NOT_APPLICABLE,
            (f"no permission matches action <{ctx.action.value}>"
             + (f" and target <{target.value}>" if target is not None else ""),),
        )
    all_reasons: list[str] = []
    for permission in matching:
        reasons = []
        satisfied = True
        for constraint in permission.constraints:
            holds, reason = _constraint_holds(constraint, ctx)
            reasons.append(reason)
            if holds is not True:
                satisfied = False
        if satisfied:
            if not reasons:
                reasons.append("permission has no constraints")
            return Decision(Outcome.PERMIT, tuple(reasons))
        all_reasons.extend(reasons)
    return Decision(Outcome.DENY, tuple(all_reasons))


def wellformed(policy: Policy, now: datetime | None = None) -> list[Finding]:
    """Findings for structural problems; pass ``now`` to check deadlines."""
    findings = [Finding(FindingLevel.WARNING, w) for w in policy.warnings]
    if not policy.permissions:
        findings.append(Finding(FindingLevel.ERROR, "policy has no permissions"))
    for i, permission in enumerate(policy.permissions):
        where = f"permission #{i + 1}"
        findings.extend(_check_permission(permission, where, now))
    return findings


def _check_permission(permission: Permission, where: str, now: datetime | None) -> list[Finding]:
    findings = []
    if not permission.target.is_absolute():
        findings.append(Finding(FindingLevel.ERROR, f"{where}: target IRI is not absolute"))
    if not permission.action.is_absolute():
        findings.append(Finding(FindingLevel.ERROR, f"{where}: action IRI is not absolute"))
    for constraint in permission.constraints:
        findings.extend(_check_constraint(constraint, where, now))
    return findings


def _check_constraint(constraint: Constraint, where: str, now: datetime | None) -> list[Finding]:
    findings = []
    left, op, operand = constraint.left_operand, constraint.operator, constraint.right_operand
    if left is None:
        findings.append(
            Finding(FindingLevel.WARNING, f"{where}: unknown left operand <{constraint.left_operand_iri.value}>")
        )
        return findings
    if op is None:
        findings.append(
            Finding(FindingLevel.WARNING, f"{where}: unknown operator <{constraint.operator_iri.value}>")
        )
        return findings
    if left is LeftOperand.SPATIAL:
        if op not in EQUALITY_OPERATORS:
            findings.append(
                Finding(FindingLevel.ERROR, f"{where}: operator/operand mismatch: spatial cannot use {op.value}")
            )
        if not isinstance(operand, Literal):
            findings.append(Finding(FindingLevel.ERROR, f"{where}: spatial operand must be a string literal"))
    else:
        if op not in ORDERING_OPERATORS:
            findings.append(
                Finding(
                    FindingLevel.ERROR,
                    f"{where}: operator/operand mismatch: dateTime needs an ordering operator, not {op.value}",
                )
            )
            return findings
        if not isinstance(operand, Literal):
            findings.append(Finding(FindingLevel.ERROR, f"{where}: dateTime operand must be a literal"))
            return findings
        try:
            bound = parse_datetime(operand.lexical)
        except ValueError:
            findings.append(
                Finding(FindingLevel.ERROR, f"{where}: {operand.lexical!r} is not a valid xsd:dateTime operand")
            )
            return findings
        if now is not None and op in (Operator.LT, Operator.LTEQ) and bound < now:
            findings.append(
                Finding(FindingLevel.WARNING, f"{where}: deadline {operand.lexical} is already in the past")
            )
    return findings
