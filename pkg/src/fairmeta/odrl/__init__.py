"""ODRL usage-policy model, parsing, and permit/deny evaluation."""

from .evaluate import evaluate, wellformed
from .model import (
    Constraint,
    Decision,
    Finding,
    FindingLevel,
    LeftOperand,
    MalformedPermissionError,
    MultiplePoliciesError,
    NoPolicyFoundError,
    Operator,
    Outcome,
    Permission,
    Policy,
    PolicyError,
    PolicyKind,
    UsageContext,
)
from .parse import parse_policy, policy_to_graph

__all__ = [
    "Constraint",
    "Decision",
    "Finding",
    "FindingLevel",
    "LeftOperand",
    "MalformedPermissionError",
    "MultiplePoliciesError",
    "NoPolicyFoundError",
    "Operator",
    "Outcome",
    "Permission",
    "Policy",
    "PolicyError",
    "PolicyKind",
    "UsageContext",
    "evaluate",
    "parse_policy",
    "policy_to_graph",
    "wellformed",
]
