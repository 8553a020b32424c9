"""GND persistent-identifier resolution via SPARQL, and the LLM tool for it."""

from .query import EmptyNameError, build_lookup_query, escape_literal
from .resolver import (
    GND_DEFAULT_ENDPOINT,
    EndpointUnreachableError,
    FixtureTransport,
    HttpSparqlTransport,
    MalformedResultsError,
    PidError,
    PidRecord,
    PidResolver,
    RecordingTransport,
    SparqlEndpointConfig,
    SparqlTimeoutError,
    SparqlTransport,
    query_fingerprint,
    resolve_pid,
)
from .tool import NO_MATCH_MESSAGE, TOOL_NAME, format_records, make_executor, tool_definition

__all__ = [
    "EmptyNameError",
    "EndpointUnreachableError",
    "FixtureTransport",
    "GND_DEFAULT_ENDPOINT",
    "HttpSparqlTransport",
    "MalformedResultsError",
    "NO_MATCH_MESSAGE",
    "PidError",
    "PidRecord",
    "PidResolver",
    "RecordingTransport",
    "SparqlEndpointConfig",
    "SparqlTimeoutError",
    "SparqlTransport",
    "TOOL_NAME",
    "build_lookup_query",
    "escape_literal",
    "format_records",
    "make_executor",
    "query_fingerprint",
    "resolve_pid",
    "tool_definition",
]
