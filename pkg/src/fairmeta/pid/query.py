"""SPARQL lookup query construction.

The person name enters the query exactly once, as one escaped string
literal bound to a variable; every comparison references the variable.
That keeps adversarial names inside the literal no matter what they
contain (the injection-safety property tests scan the query structure).
"""

from __future__ import annotations

GNDO = "https://d-nb.info/standards/elementset/gnd#"

_ESCAPES = {
    "\\": "\\\\",
    '"': '\\"',
    "\n": "\\n",
    "\r": "\\r",
    "\t": "\\t",
}


class EmptyNameError(ValueError):
    def __init__(self):
        super().__init__("name must not be empty")


def escape_literal(value: str) -> str:
    return "".join(_ESCAPES.get(c, c) for c in value)


def build_lookup_query(name: str) -> str:
    """SELECT query binding ?id from gndo:gndIdentifier for the given person name.

    Matches the preferred name exactly, with a case-insensitive fallback.
    """
    trimmed = name.strip()
    if not trimmed:
        raise EmptyNameError()
    literal = escape_literal(trimmed)
    return (
        f"PREFIX gndo: <{GNDO}>\n"
        "SELECT DISTINCT ?entity ?id ?name WHERE {\n"
        f'  BIND("{literal}" AS ?q)\n'
        "  ?entity gndo:gndIdentifier ?id ;\n"
        "          gndo:preferredNameForThePerson ?name .\n"
        "  FILTER(STR(?name) = STR(?q) || LCASE(STR(?name)) = LCASE(STR(?q)))\n"
        "}\n"
        "ORDER BY ?id"
    )
