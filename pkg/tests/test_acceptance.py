"""Acceptance suite: one test per release criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines. Everything here runs offline; an autouse guard turns any attempted
network connection into a hard failure.
"""

import json
import random
import re
import socket
import time

import pytest

from fairmeta import fixtures
from fairmeta.llm import load_script, scripted_backend, system, user, Conversation
from fairmeta.namespaces import DCTERMS, GNDO, ODRL, XSD
from fairmeta.odrl import (
    Constraint,
    LeftOperand,
    Operator,
    Outcome,
    Permission,
    Policy,
    PolicyKind,
    UsageContext,
    evaluate,
    parse_policy,
)
from fairmeta.pid import build_lookup_query
from fairmeta.pipeline import SchemaRules, generate_validated, load_scenario, run_scenario, schema_validator
from fairmeta.rdf import (
    Iri,
    Literal,
    Triple,
    graph_isomorphic,
    graph_subsumes,
    parse_turtle,
    serialize_turtle,
)
from fairmeta.shacl import ConstraintKind, parse_shapes, validate
from graphgen import random_graph

DEADLINE = "2024-05-10T23:59:59"
POLICY_IRI = "http://example.org/policy/12345"


@pytest.fixture(autouse=True)
def no_network(monkeypatch):
    def blocked(*args, **kwargs):
        raise AssertionError("acceptance tests must not touch the network")

    monkeypatch.setattr(socket.socket, "connect", blocked)


def report(name: str):
    print(f"\nACCEPTANCE PASS: {name}")


def test_demo_scenario_replay():
    """Scripted replay of the full curator session, byte-identical, < 5 s, offline."""
    started = time.perf_counter()
    scenario = load_scenario(fixtures.DEMO_SCENARIO)
    session1, artifacts1 = run_scenario(scenario, session_id="acceptance-a")
    session2, artifacts2 = run_scenario(scenario, session_id="acceptance-a")
    elapsed = time.perf_counter() - started

    # (a) monotonicity: the base shapes survive into the final schema
    base = parse_turtle(fixtures.read(fixtures.BASE_SHAPES))
    assert graph_subsumes(base, session1.shapes.source).holds

    # (b) the generated instance is isomorphic to the reference fixture
    instance = session1.instance
    reference = parse_turtle(fixtures.read(fixtures.INSTANCE))
    assert graph_isomorphic(instance, reference)
    (title,) = instance.match(predicate=DCTERMS.title)
    assert title.object == Literal("Der Wanderer über dem Nebelmeer", lang="de")
    (policy_ref,) = instance.match(predicate=ODRL.hasPolicy)
    assert policy_ref.object == Iri(POLICY_IRI)
    (pid,) = instance.match(predicate=GNDO.gndIdentifier)
    assert pid.object == Literal("118535889")
    (date,) = instance.match(predicate=GNDO.dateOfProduction)
    assert date.object == Literal("1818-01-01T00:00:00", datatype=str(XSD) + "dateTime")

    # (c) the policy carries the two constraints and the preserved IRI
    policy = session1.policy
    assert policy.iri == Iri(POLICY_IRI)
    assert policy.iri == policy_ref.object
    (permission,) = policy.permissions
    assert permission.action == ODRL.use
    by_kind = {c.left_operand: c for c in permission.constraints}
    spatial = by_kind[LeftOperand.SPATIAL]
    assert spatial.operator is Operator.EQ and spatial.right_operand.lexical == "DE"
    temporal = by_kind[LeftOperand.DATE_TIME]
    assert temporal.operator is Operator.LTEQ and temporal.right_operand.lexical == DEADLINE

    # byte-identical across two runs
    dump1 = json.dumps(artifacts1.to_dict(), sort_keys=True, ensure_ascii=False)
    dump2 = json.dumps(artifacts2.to_dict(), sort_keys=True, ensure_ascii=False)
    assert dump1 == dump2

    assert elapsed < 5.0, f"replay took {elapsed:.2f}s (budget 5s)"
    report(f"painting-demo replay (byte-identical, {elapsed:.2f}s, no network)")


def test_repair_loop_reproduces_correction():
    """The validator suite finds both schema defects; repair converges in 2 attempts."""
    base = parse_shapes(parse_turtle(fixtures.read(fixtures.BASE_SHAPES)))
    rules = SchemaRules(
        allowed_property_paths=frozenset(
            {
                str(DCTERMS) + "title",
                str(ODRL) + "hasPolicy",
                str(GNDO) + "firstArtist",
                str(GNDO) + "dateOfProduction",
                str(GNDO) + "gndIdentifier",
            }
        ),
        required_datatypes={str(GNDO) + "dateOfProduction": str(XSD) + "dateTime"},
    )
    backend = scripted_backend(load_script(fixtures.SCRIPTS_DIR / "repair_loop.json"))
    conv = Conversation(
        (system("expert"), user("please extend the SHACL shapes for paintings")),
        model_id="scripted",
    )
    outcome = generate_validated(conv, [schema_validator(base, rules)], backend, max_retries=2)

    assert outcome.attempts == 2
    (round1,) = outcome.repair_log
    assert any("preferredNameForThePerson" in f for f in round1.findings), round1.findings
    assert any("dateOfProduction" in f and "dateTime" in f for f in round1.findings), round1.findings
    final_paths = {c.path for s in parse_shapes(outcome.artifact).shapes for c in s.properties}
    assert GNDO.preferredNameForThePerson not in final_paths
    report("repair loop detects both defects and converges in exactly 2 attempts")


def test_odrl_truth_table():
    """Permit only for (DE, timestamp <= deadline, use) over the 12-case grid."""
    policy = parse_policy(parse_turtle(fixtures.read(fixtures.POLICY)))
    countries = ["DE", "FR"]
    timestamps = ["2024-01-01T00:00:00", DEADLINE, "2024-06-01T00:00:00"]  # before, boundary, after
    actions = [ODRL.use, ODRL.distribute]
    cases = 0
    for country in countries:
        for timestamp in timestamps:
            for action in actions:
                cases += 1
                decision = evaluate(policy, UsageContext.of(country, timestamp, action))
                should_permit = country == "DE" and timestamp <= DEADLINE and action == ODRL.use
                if should_permit:
                    assert decision.outcome is Outcome.PERMIT, (country, timestamp, action, decision)
                elif action != ODRL.use:
                    assert decision.outcome is Outcome.NOT_APPLICABLE, (country, timestamp, action, decision)
                else:
                    assert decision.outcome is Outcome.DENY, (country, timestamp, action, decision)
    assert cases == 12
    report("ODRL truth table: 12/12 cells exact")


def test_shacl_mutation_suite():
    """Every required-path deletion and datatype mutation is detected."""
    shapes = parse_shapes(parse_turtle(fixtures.read(fixtures.CORRECTED_SHAPES)))
    instance = parse_turtle(fixtures.read(fixtures.INSTANCE))
    assert validate(instance, shapes).conforms

    required_paths = sorted(
        {c.path for s in shapes.shapes for c in s.properties if (c.min_count or 0) >= 1},
        key=lambda p: p.value,
    )
    assert len(required_paths) == 5
    detected = 0
    for path in required_paths:
        mutated = instance.without_triples(instance.match(predicate=path))
        violations = validate(mutated, shapes).violations
        named = [v for v in violations if v.path == path]
        assert named, f"deleting {path.value} went undetected"
        detected += 1

    datatype_constraints = sorted(
        {(c.path, c.datatype) for s in shapes.shapes for c in s.properties if c.datatype is not None},
        key=lambda pair: pair[0].value,
    )
    assert len(datatype_constraints) == 2
    for path, _datatype in datatype_constraints:
        (old,) = instance.match(predicate=path)
        wrong = Literal(old.object.lexical, datatype="http://example.org/wrongType")
        mutated = instance.without_triples([old]).with_triples([Triple(old.subject, old.predicate, wrong)])
        violations = validate(mutated, shapes).violations
        assert any(
            v.constraint is ConstraintKind.DATATYPE and v.path == path for v in violations
        ), f"datatype mutation on {path.value} went undetected"
        detected += 1

    assert detected == len(required_paths) + len(datatype_constraints)
    report(f"SHACL mutation suite: {detected}/{detected} mutations detected")


def test_turtle_roundtrip_corpus():
    """>= 1000 random graphs: serialize-then-parse is isomorphism-preserving."""
    rng = random.Random(118535889)
    started = time.perf_counter()
    count = 1000
    for i in range(count):
        graph = random_graph(rng)
        reparsed = parse_turtle(serialize_turtle(graph))
        assert graph_isomorphic(graph, reparsed), f"round-trip failed for corpus graph {i}"
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0, f"corpus run took {elapsed:.1f}s (budget 60s)"
    report(f"turtle round-trip corpus: {count}/{count} isomorphic in {elapsed:.1f}s")


def _string_literals(query: str) -> list[str]:
    literals = []
    i = 0
    while i < len(query):
        if query[i] == '"':
            i += 1
            chars = []
            while i < len(query) and query[i] != '"':
                if query[i] == "\\" and i + 1 < len(query):
                    esc = query[i + 1]
                    chars.append({"n": "\n", "r": "\r", "t": "\t", '"': '"', "\\": "\\"}.get(esc, esc))
                    i += 2
                else:
                    chars.append(query[i])
                    i += 1
            assert i < len(query), "unterminated literal"
            i += 1
            literals.append("".join(chars))
        else:
            i += 1
    return literals


def test_injection_safety():
    """Adversarial names end up in exactly one escaped string literal."""
    corpus = [
        'x" } UNION { ?s ?p ?o',
        'a"; DROP GRAPH <http://x> ; "',
        "name } FILTER(?id = ?secret) {",
        'quote"inside',
        "back\\slash",
        "new\nline } ",
        "tab\tseparated\"",
        "?var ${} <iri>",
        "ÜnïcÖde } name",
        '"""',
    ]
    rng = random.Random(42)
    alphabet = 'abcXYZ"\\\n\r\t{}<>#;.()?$%Ü '
    corpus += [
        "".join(rng.choice(alphabet) for _ in range(rng.randrange(1, 40))) for _ in range(500)
    ]
    checked = 0
    for name in corpus:
        if not name.strip():
            continue
        query = build_lookup_query(name)
        matches = [lit for lit in _string_literals(query) if lit == name.strip()]
        assert len(matches) == 1, f"name not confined to one literal: {name!r}"
        skeleton = re.sub(r'"(\\.|[^"\\])*"', "@LIT@", query)
        assert skeleton.count("{") == skeleton.count("}") == 1, f"query structure broken by {name!r}"
        checked += 1
    report(f"injection safety: {checked}/{checked} adversarial names confined to one literal")


def _random_constraint(rng: random.Random) -> Constraint:
    roll = rng.randrange(6)
    if roll <= 1:
        op = rng.choice([Operator.EQ, Operator.NEQ])
        return Constraint(
            LeftOperand.SPATIAL, ODRL.spatial, op, ODRL.term(op.value.lower()), Literal(rng.choice(["DE", "FR", "IT"]))
        )
    if roll <= 3:
        op = rng.choice([Operator.LT, Operator.LTEQ, Operator.GT, Operator.GTEQ])
        stamp = f"2024-0{rng.randrange(1, 9)}-{rng.randrange(10, 28)}T00:00:00"
        return Constraint(
            LeftOperand.DATE_TIME, ODRL.dateTime, op, ODRL.term(op.value.lower()), Literal(stamp, datatype=str(XSD) + "dateTime")
        )
    if roll == 4:  # operator/operand mismatch: never satisfiable
        return Constraint(LeftOperand.SPATIAL, ODRL.spatial, Operator.LTEQ, ODRL.lteq, Literal("DE"))
    return Constraint(None, ODRL.purpose, Operator.EQ, ODRL.eq, Literal("research"))


def _oracle(constraints, ctx: UsageContext) -> bool:
    """Brute-force conjunction over interpretable constraints; unknown is False."""
    from fairmeta.rdf import parse_datetime

    for c in constraints:
        if c.left_operand is LeftOperand.SPATIAL and c.operator in (Operator.EQ, Operator.NEQ):
            same = ctx.country == c.right_operand.lexical
            ok = same if c.operator is Operator.EQ else not same
        elif c.left_operand is LeftOperand.DATE_TIME and c.operator in (
            Operator.LT,
            Operator.LTEQ,
            Operator.GT,
            Operator.GTEQ,
        ):
            bound = parse_datetime(c.right_operand.lexical)
            ok = {
                Operator.LT: ctx.timestamp < bound,
                Operator.LTEQ: ctx.timestamp <= bound,
                Operator.GT: ctx.timestamp > bound,
                Operator.GTEQ: ctx.timestamp >= bound,
            }[c.operator]
        else:
            ok = False
        if not ok:
            return False
    return True


def test_fail_closed_policy_property():
    """Randomized policies: engine matches the oracle; extra constraints never flip Deny to Permit."""
    rng = random.Random(20240510)
    target = Iri("http://example.org/asset")
    agreements = 0
    for _ in range(600):
        constraints = tuple(_random_constraint(rng) for _ in range(rng.randrange(0, 5)))
        policy = Policy(
            iri=Iri("http://example.org/p"),
            kind=PolicyKind.SET,
            permissions=(Permission(target, ODRL.use, constraints),),
        )
        ctx = UsageContext.of(
            rng.choice(["DE", "FR"]), f"2024-0{rng.randrange(1, 9)}-15T12:00:00", ODRL.use
        )
        decision = evaluate(policy, ctx)
        assert (decision.outcome is Outcome.PERMIT) == _oracle(constraints, ctx)
        extra = _random_constraint(rng)
        stricter = Policy(
            iri=policy.iri,
            kind=policy.kind,
            permissions=(Permission(target, ODRL.use, constraints + (extra,)),),
        )
        stricter_decision = evaluate(stricter, ctx)
        if decision.outcome is not Outcome.PERMIT:
            assert stricter_decision.outcome is not Outcome.PERMIT, "a new constraint flipped Deny to Permit"
        agreements += 1
    report(f"fail-closed policy property: {agreements}/600 cases agree with the oracle")
