"""Blank-node-aware graph comparison.

Both checks search the space of blank-node mappings exhaustively
(backtracking over candidate assignments), which is exact and cheap for
the supported limit of 8 blank nodes per graph. graph_isomorphic is the
independent oracle the round-trip tests rely on, so it must stay free of
shortcuts tied to the serializer or parser.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooManyBlankNodesError
from .graph import Graph, GraphDelta
from .terms import BlankNode, Term, Triple, triple_sort_key

BLANK_NODE_LIMIT = 8


def _mapped(term: Term, mapping: dict[BlankNode, BlankNode]) -> Term:
    if isinstance(term, BlankNode):
        return mapping.get(term, term)
    return term


def _map_triple(t: Triple, mapping: dict[BlankNode, BlankNode]) -> Triple:
    return Triple(_mapped(t.subject, mapping), _mapped(t.predicate, mapping), _mapped(t.object, mapping))


def _triple_bnodes(t: Triple) -> set[BlankNode]:
    out = set()
    if isinstance(t.subject, BlankNode):
        out.add(t.subject)
    if isinstance(t.object, BlankNode):
        out.add(t.object)
    return out


def _search(
    triples: list[Triple],
    target: frozenset[Triple],
    candidates: list[BlankNode],
    mapping: dict[BlankNode, BlankNode],
    used: set[BlankNode],
    injective: bool,
) -> dict[BlankNode, BlankNode] | None:
    """Find a mapping under which every triple appears in target, or None."""
    if not triples:
        return dict(mapping)
    head, rest = triples[0], triples[1:]
    free = [n for n in _triple_bnodes(head) if n not in mapping]
    if not free:
        if _map_triple(head, mapping) in target:
            return _search(rest, target, candidates, mapping, used, injective)
        return None
    # assign the first unbound node of this triple and recurse on the same triple
    node = sorted(free, key=lambda n: n.label)[0]
    for candidate in candidates:
        if injective and candidate in used:
            continue
        mapping[node] = candidate
        used.add(candidate)
        found = _search(triples, target, candidates, mapping, used, injective)
        if found is not None:
            return found
        del mapping[node]
        used.discard(candidate)
    return None


def _best_effort_mapping(
    triples: list[Triple],
    target: frozenset[Triple],
    candidates: list[BlankNode],
) -> dict[BlankNode, BlankNode]:
    """Injective mapping maximizing the number of matched triples (for witnesses)."""
    best = {"score": -1, "mapping": {}}

    def rec(idx: int, mapping: dict[BlankNode, BlankNode], used: set[BlankNode], score: int):
        if idx == len(triples):
            if score > best["score"]:
                best["score"] = score
                best["mapping"] = dict(mapping)
            return
        head = triples[idx]
        free = sorted((n for n in _triple_bnodes(head) if n not in mapping), key=lambda n: n.label)
        if not free:
            hit = 1 if _map_triple(head, mapping) in target else 0
            rec(idx + 1, mapping, used, score + hit)
            return
        node = free[0]
        options = [c for c in candidates if c not in used]
        if not options:
            rec(idx + 1, mapping, used, score)
            return
        for candidate in options:
            mapping[node] = candidate
            used.add(candidate)
            rec(idx, mapping, used, score)
            del mapping[node]
            used.discard(candidate)

    rec(0, {}, set(), 0)
    return best["mapping"]


def _check_limit(graph: Graph, label: str = "graph"):
    nodes = graph.blank_nodes()
    if len(nodes) > BLANK_NODE_LIMIT:
        raise TooManyBlankNodesError(len(nodes), BLANK_NODE_LIMIT)


@dataclass(frozen=True)
class SubsumptionResult:
    holds: bool
    witness: GraphDelta

    def __bool__(self) -> bool:
        return self.holds


def graph_subsumes(base: Graph, extended: Graph) -> SubsumptionResult:
    """True iff some injective blank-node mapping embeds every base triple in extended.

    The witness delta lists base triples that could not be matched (removed)
    and extended triples not accounted for by the embedding (added), under
    the best mapping found. Base may have at most 8 blank nodes.
    """
    _check_limit(base)
    base_triples = sorted(base.triples, key=triple_sort_key)
    # ground triples first so bindings are pruned early
    base_triples.sort(key=lambda t: len(_triple_bnodes(t)))
    candidates = sorted(extended.blank_nodes(), key=lambda n: n.label)
    mapping = _search(base_triples, extended.triples, candidates, {}, set(), injective=True)
    if mapping is not None:
        mapped = {_map_triple(t, mapping) for t in base.triples}
        added = frozenset(extended.triples - mapped)
        return SubsumptionResult(True, GraphDelta(added=added, removed=frozenset()))
    best = _best_effort_mapping(base_triples, extended.triples, candidates)
    mapped = {_map_triple(t, best) for t in base.triples}
    removed = frozenset(t for t in base.triples if _map_triple(t, best) not in extended.triples)
    added = frozenset(extended.triples - mapped)
    return SubsumptionResult(False, GraphDelta(added=added, removed=removed))


def graph_isomorphic(a: Graph, b: Graph) -> bool:
    """True iff a bijection over blank nodes makes the triple sets equal."""
    _check_limit(a)
    _check_limit(b)
    if len(a.triples) != len(b.triples):
        return False
    a_nodes = a.blank_nodes()
    b_nodes = b.blank_nodes()
    if len(a_nodes) != len(b_nodes):
        return False
    if not a_nodes:
        return a.triples == b.triples
    # ground parts must agree exactly
    a_ground = {t for t in a.triples if not _triple_bnodes(t)}
    b_ground = {t for t in b.triples if not _triple_bnodes(t)}
    if a_ground != b_ground:
        return False
    triples = sorted(a.triples, key=triple_sort_key)
    triples.sort(key=lambda t: len(_triple_bnodes(t)))
    candidates = sorted(b_nodes, key=lambda n: n.label)
    mapping = _search(triples, b.triples, candidates, {}, set(), injective=True)
    if mapping is None:
        return False
    # a bijection that embeds all of a into b with equal sizes is an isomorphism
    return {_map_triple(t, mapping) for t in a.triples} == set(b.triples)
