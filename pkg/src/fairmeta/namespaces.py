"""Well-known vocabulary namespaces used across the toolkit."""

from __future__ import annotations

from .rdf.terms import Iri


class Namespace:
    """IRI factory: ``SH.NodeShape`` -> Iri("http://www.w3.org/ns/shacl#NodeShape")."""

    def __init__(self, base: str):
        self.base = base

    def __getattr__(self, local: str) -> Iri:
        if local.startswith("_"):
            raise AttributeError(local)
        return Iri(self.base + local)

    def term(self, local: str) -> Iri:
        return Iri(self.base + local)

    def __contains__(self, iri: Iri) -> bool:
        return isinstance(iri, Iri) and iri.value.startswith(self.base)

    def __str__(self) -> str:
        return self.base


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
SH = Namespace("http://www.w3.org/ns/shacl#")
ODRL = Namespace("http://www.w3.org/ns/odrl/2/")
DCTERMS = Namespace("http://purl.org/dc/terms/")
DCAT = Namespace("http://www.w3.org/ns/dcat#")
GNDO = Namespace("https://d-nb.info/standards/elementset/gnd#")

#: prefix label -> namespace, as used by the shipped fixtures and serializer defaults
WELL_KNOWN_PREFIXES = {
    "rdf": RDF.base,
    "rdfs": RDFS.base,
    "xsd": XSD.base,
    "sh": SH.base,
    "odrl": ODRL.base,
    "dcterms": DCTERMS.base,
    "dcat": DCAT.base,
    "gndo": GNDO.base,
}
