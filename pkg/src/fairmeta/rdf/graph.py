"""Immutable RDF graph with set semantics.

Two graphs are equal iff their triple sets are equal; the prefix map is
serialization metadata only and never takes part in comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .terms import BlankNode, Term, Triple


class Graph:
    __slots__ = ("_triples", "_prefixes")

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Mapping[str, str] | None = None,
    ):
        self._triples: frozenset[Triple] = frozenset(triples)
        self._prefixes: dict[str, str] = dict(prefixes or {})

    @property
    def triples(self) -> frozenset[Triple]:
        return self._triples

    @property
    def prefixes(self) -> dict[str, str]:
        return dict(self._prefixes)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f"Graph(<{len(self._triples)} triples>)"

    def with_triples(self, triples: Iterable[Triple]) -> "Graph":
        """New graph with the given triples added (duplicates are no-ops)."""
        return Graph(self._triples | frozenset(triples), self._prefixes)

    def without_triples(self, triples: Iterable[Triple]) -> "Graph":
        return Graph(self._triples - frozenset(triples), self._prefixes)

    def with_prefixes(self, prefixes: Mapping[str, str]) -> "Graph":
        merged = dict(self._prefixes)
        merged.update(prefixes)
        return Graph(self._triples, merged)

    def match(
        self,
        subject: Term | None = None,
        predicate: Term | None = None,
        object: Term | None = None,
    ) -> list[Triple]:
        """All triples matching the pattern; None is a wildcard."""
        return [
            t
            for t in self._triples
            if (subject is None or t.subject == subject)
            and (predicate is None or t.predicate == predicate)
            and (object is None or t.object == object)
        ]

    def objects(self, subject: Term, predicate: Term) -> list[Term]:
        return [t.object for t in self._triples if t.subject == subject and t.predicate == predicate]

    def subjects(self, predicate: Term | None = None, object: Term | None = None) -> list[Term]:
        seen = set()
        out = []
        for t in self._triples:
            if (predicate is None or t.predicate == predicate) and (object is None or t.object == object):
                if t.subject not in seen:
                    seen.add(t.subject)
                    out.append(t.subject)
        return out

    def blank_nodes(self) -> set[BlankNode]:
        nodes: set[BlankNode] = set()
        for t in self._triples:
            if isinstance(t.subject, BlankNode):
                nodes.add(t.subject)
            if isinstance(t.object, BlankNode):
                nodes.add(t.object)
        return nodes


@dataclass(frozen=True)
class GraphDelta:
    """Triples added/removed between two graphs, under blank-node-aware matching."""

    added: frozenset[Triple] = field(default_factory=frozenset)
    removed: frozenset[Triple] = field(default_factory=frozenset)

    def __post_init__(self):
        overlap = self.added & self.removed
        if overlap:
            raise ValueError(f"delta added and removed sets overlap: {overlap}")

    @property
    def empty(self) -> bool:
        return not self.added and not self.removed
