"""ODRL permission model and decision types."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from datetime import datetime, timezone

from ..rdf import Iri, Term, parse_datetime


class PolicyError(Exception):
    """Base class for policy parsing errors."""


class NoPolicyFoundError(PolicyError):
    pass


class MultiplePoliciesError(PolicyError):
    pass


class MalformedPermissionError(PolicyError):
    pass


class PolicyKind(enum.Enum):
    SET = "Set"
    OFFER = "Offer"
    AGREEMENT = "Agreement"


class LeftOperand(enum.Enum):
    SPATIAL = "Spatial"
    DATE_TIME = "DateTime"


class Operator(enum.Enum):
    EQ = "Eq"
    NEQ = "Neq"
    LT = "Lt"
    LTEQ = "Lteq"
    GT = "Gt"
    GTEQ = "Gteq"


#: ordering operators are the only ones meaningful for dateTime bounds
ORDERING_OPERATORS = frozenset({Operator.LT, Operator.LTEQ, Operator.GT, Operator.GTEQ})
EQUALITY_OPERATORS = frozenset({Operator.EQ, Operator.NEQ})


@dataclass(frozen=True)
class Constraint:
    left_operand: LeftOperand | None  # None: outside the known vocabulary
    left_operand_iri: Iri
    operator: Operator | None
    operator_iri: Iri
    right_operand: Term


@dataclass(frozen=True)
class Permission:
    target: Iri
    action: Iri
    constraints: tuple[Constraint, ...] = ()


@dataclass(frozen=True)
class Policy:
    iri: Iri
    kind: PolicyKind
    permissions: tuple[Permission, ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.iri.is_absolute():
            raise MalformedPermissionError(f"policy IRI must be absolute, got <{self.iri.value}>")


_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")


@dataclass(frozen=True)
class UsageContext:
    country: str
    timestamp: datetime
    action: Iri

    def __post_init__(self):
        if not _COUNTRY_RE.match(self.country):
            raise ValueError(f"country must be an ISO 3166-1 alpha-2 code, got {self.country!r}")
        if self.timestamp.tzinfo is None:
            object.__setattr__(self, "timestamp", self.timestamp.replace(tzinfo=timezone.utc))

    @classmethod
    def of(cls, country: str, timestamp: str, action: Iri | str) -> "UsageContext":
        act = action if isinstance(action, Iri) else Iri(action)
        return cls(country=country, timestamp=parse_datetime(timestamp), action=act)


class Outcome(enum.Enum):
    PERMIT = "Permit"
    DENY = "Deny"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Decision:
    outcome: Outcome
    reasons: tuple[str, ...] = ()


class FindingLevel(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    level: FindingLevel
    message: str

    def __str__(self) -> str:
        return f"{self.level.value}: {self.message}"
