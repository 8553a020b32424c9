"""Errors raised by the RDF core.

Parse errors always carry a 1-based line and column; their messages are
written to be fed back to an LLM in a repair prompt, so they name the
offending construct in plain language.
"""

from __future__ import annotations


class RdfError(Exception):
    """Base class for RDF core errors."""


class TurtleSyntaxError(RdfError):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnresolvedPrefixError(TurtleSyntaxError):
    def __init__(self, prefix: str, line: int, column: int):
        self.prefix = prefix
        super().__init__(f"prefix '{prefix}:' is not declared (missing @prefix directive?)", line, column)


class RelativeIriError(TurtleSyntaxError):
    def __init__(self, iri: str, line: int, column: int):
        self.iri = iri
        super().__init__(f"relative IRI <{iri}> cannot be resolved: no base IRI given", line, column)


class TooManyBlankNodesError(RdfError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(
            f"graph has {count} blank nodes; isomorphism/subsumption checks support at most {limit}"
        )


class UnsupportedDatatypeError(RdfError):
    def __init__(self, datatype: str):
        self.datatype = datatype
        super().__init__(f"unsupported datatype <{datatype}>")
