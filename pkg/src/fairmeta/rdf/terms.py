"""RDF term and triple model.

Terms are immutable values; a term is an IRI, a blank node, or a literal.
Literals normalize on construction: a language-tagged literal always has
datatype rdf:langString, an untyped one gets xsd:string, and language tags
are stored lowercase (they compare case-insensitively per BCP 47).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

RDF_LANG_STRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"
XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")


class Term:
    """Base class for RDF terms."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Iri(Term):
    value: str

    def is_absolute(self) -> bool:
        return bool(_SCHEME_RE.match(self.value))

    def __repr__(self) -> str:
        return f"Iri({self.value!r})"


@dataclass(frozen=True, slots=True)
class BlankNode(Term):
    label: str

    def __repr__(self) -> str:
        return f"BlankNode({self.label!r})"


@dataclass(frozen=True, slots=True)
class Literal(Term):
    lexical: str
    datatype: str = field(default=XSD_STRING)
    lang: str | None = None

    def __post_init__(self):
        if self.lang is not None:
            object.__setattr__(self, "lang", self.lang.lower())
            object.__setattr__(self, "datatype", RDF_LANG_STRING)
        elif not self.datatype:
            object.__setattr__(self, "datatype", XSD_STRING)

    def __repr__(self) -> str:
        if self.lang:
            return f"Literal({self.lexical!r}, lang={self.lang!r})"
        if self.datatype != XSD_STRING:
            return f"Literal({self.lexical!r}, datatype={self.datatype!r})"
        return f"Literal({self.lexical!r})"


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError("triple subject must not be a literal")
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise ValueError(f"triple subject must be an IRI or blank node, got {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise ValueError(f"triple predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, Term):
            raise ValueError(f"triple object must be an RDF term, got {self.object!r}")

    def __repr__(self) -> str:
        return f"Triple({self.subject!r}, {self.predicate!r}, {self.object!r})"


def term_sort_key(term: Term) -> tuple:
    """Total order over terms: IRIs, then blank nodes, then literals."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BlankNode):
        return (1, term.label, "", "")
    assert isinstance(term, Literal)
    return (2, term.lexical, term.datatype, term.lang or "")


def triple_sort_key(t: Triple) -> tuple:
    return (term_sort_key(t.subject), term_sort_key(t.predicate), term_sort_key(t.object))
