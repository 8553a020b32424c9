"""Random graph generator for round-trip and property testing.

Generates graphs within the supported Turtle subset: IRI/blank-node
subjects, IRI predicates, IRI/blank-node/literal objects, at most 8 blank
nodes, literals with plain/lang/typed forms including awkward lexicals
(escapes, unicode, empty strings).
"""

from __future__ import annotations

import random

from fairmeta.rdf import BlankNode, Graph, Iri, Literal, Triple

_IRIS = [
    "http://example.org/a",
    "http://example.org/b",
    "http://example.org/path/c",
    "http://example.org/DerWandererÜberDemNebelmeer",
    "https://d-nb.info/standards/elementset/gnd#gndIdentifier",
    "http://purl.org/dc/terms/title",
    "urn:uuid:0f1e2d3c",
    "http://example.org/with#fragment",
]

_LEXICALS = [
    "",
    "plain",
    "Der Wanderer über dem Nebelmeer",
    'quote " inside',
    "back\\slash",
    "line\nbreak",
    "tab\there",
    "118535889",
    "ends with dot.",
    "unicode ☃ snowman",
]

_DATATYPES = [
    "http://www.w3.org/2001/XMLSchema#string",
    "http://www.w3.org/2001/XMLSchema#dateTime",
    "http://www.w3.org/2001/XMLSchema#anyURI",
    "http://example.org/customType",
]

_LANGS = ["de", "en", "en-GB"]

_PREFIXES = {
    "ex": "http://example.org/",
    "gndo": "https://d-nb.info/standards/elementset/gnd#",
    "dcterms": "http://purl.org/dc/terms/",
}


def random_literal(rng: random.Random) -> Literal:
    lexical = rng.choice(_LEXICALS)
    form = rng.randrange(5)
    if form == 0:
        return Literal(lexical, lang=rng.choice(_LANGS))
    if form == 1:
        return Literal(lexical, datatype=rng.choice(_DATATYPES))
    if form == 2:
        return Literal(str(rng.randrange(-1000, 1000)), datatype="http://www.w3.org/2001/XMLSchema#integer")
    if form == 3:
        return Literal(f"{rng.randrange(100)}.{rng.randrange(10, 99)}", datatype="http://www.w3.org/2001/XMLSchema#decimal")
    return Literal(lexical)


def random_graph(rng: random.Random, max_triples: int = 12, max_bnodes: int = 8) -> Graph:
    n_bnodes = rng.randrange(0, max_bnodes + 1)
    bnodes = [BlankNode(f"n{i}") for i in range(n_bnodes)]
    triples = []
    for _ in range(rng.randrange(0, max_triples + 1)):
        roll = rng.random()
        if bnodes and roll < 0.4:
            subject = rng.choice(bnodes)
        else:
            subject = Iri(rng.choice(_IRIS))
        predicate = Iri(rng.choice(_IRIS))
        roll = rng.random()
        if bnodes and roll < 0.3:
            obj = rng.choice(bnodes)
        elif roll < 0.65:
            obj = random_literal(rng)
        else:
            obj = Iri(rng.choice(_IRIS))
        triples.append(Triple(subject, predicate, obj))
    # every generated blank node must occur in some triple, or drop it
    used = set()
    for t in triples:
        if isinstance(t.subject, BlankNode):
            used.add(t.subject)
        if isinstance(t.object, BlankNode):
            used.add(t.object)
    prefixes = {k: v for k, v in _PREFIXES.items() if rng.random() < 0.7}
    return Graph(triples, prefixes=prefixes)
