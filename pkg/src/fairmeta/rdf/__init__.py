"""RDF data model, Turtle parsing/serialization, and graph comparison."""

from .errors import (
    RdfError,
    RelativeIriError,
    TooManyBlankNodesError,
    TurtleSyntaxError,
    UnresolvedPrefixError,
    UnsupportedDatatypeError,
)
from .graph import Graph, GraphDelta
from .literals import SUPPORTED_DATATYPES, parse_datetime, validate_literal
from .match import BLANK_NODE_LIMIT, SubsumptionResult, graph_isomorphic, graph_subsumes
from .terms import BlankNode, Iri, Literal, Term, Triple, term_sort_key, triple_sort_key
from .turtle import parse_turtle, resolve_iri, serialize_turtle

__all__ = [
    "BLANK_NODE_LIMIT",
    "BlankNode",
    "Graph",
    "GraphDelta",
    "Iri",
    "Literal",
    "RdfError",
    "RelativeIriError",
    "SUPPORTED_DATATYPES",
    "SubsumptionResult",
    "Term",
    "TooManyBlankNodesError",
    "Triple",
    "TurtleSyntaxError",
    "UnresolvedPrefixError",
    "UnsupportedDatatypeError",
    "graph_isomorphic",
    "graph_subsumes",
    "parse_datetime",
    "parse_turtle",
    "resolve_iri",
    "serialize_turtle",
    "term_sort_key",
    "triple_sort_key",
    "validate_literal",
]
