"""The curator's evolving workspace and the four tasks operating on it.

Task ordering is enforced (shapes before instance before policy), every
artifact stored on the session has passed its full validator list, and
all nondeterminism (clock, backend, SPARQL transport) is injected through
the config so a scripted session replays byte-identically.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Sequence

from ..llm import Backend, Conversation, assistant, complete, system, user
from ..namespaces import GNDO, ODRL
from ..odrl import Policy, parse_policy
from ..pid import PidResolver, SparqlEndpointConfig, SparqlTransport, make_executor, tool_definition
from ..rdf import Graph, Iri, Literal, parse_turtle, serialize_turtle, triple_sort_key
from ..shacl import ShapeDelta, ShapeSet, export_diagram, parse_shapes, shape_delta
from . import prompts
from .repair import RepairOutcome, Validator, generate_validated
from .validators import SchemaRules, instance_validator, policy_validator, schema_validator


class TaskOrderError(Exception):
    """A task ran before the artifacts it builds on exist."""


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class SessionConfig:
    backend: Backend
    model_id: str
    sparql_cfg: SparqlEndpointConfig
    sparql_transport: SparqlTransport
    max_retries: int = 2
    max_tool_turns: int = 8
    schema_rules: SchemaRules | None = None
    clock: Callable[[], str] = utc_now_iso


@dataclass(frozen=True)
class ArtifactSet:
    shapes_turtle: str | None = None
    instance_turtle: str | None = None
    policy_turtle: str | None = None
    explanation_text: str | None = None
    diagram_text: str | None = None
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "shapes_turtle": self.shapes_turtle,
            "instance_turtle": self.instance_turtle,
            "policy_turtle": self.policy_turtle,
            "explanation_text": self.explanation_text,
            "diagram_text": self.diagram_text,
            "provenance": self.provenance,
        }


class PipelineSession:
    def __init__(self, config: SessionConfig, session_id: str | None = None):
        self.id = session_id or uuid.uuid4().hex
        self.config = config
        self.created_at = config.clock()
        self.base_shapes: ShapeSet | None = None
        self.shapes: ShapeSet | None = None
        self.instance: Graph | None = None
        self.policy: Policy | None = None
        self.policy_graph: Graph | None = None
        self.explanation: str | None = None
        self.transcripts: dict[str, Conversation] = {}
        self.repair_logs: dict[str, list] = {}
        self.provenance: dict[str, dict] = {}
        self.last_delta: ShapeDelta | None = None
        self.observed_pids: set[str] = set()
        self.resolver = PidResolver(config.sparql_cfg, config.sparql_transport)

    # ------------------------------------------------------------------
    # setup
    # ------------------------------------------------------------------

    def load_base_shapes(self, turtle_text: str) -> ShapeSet:
        graph = parse_turtle(turtle_text)
        shapes = parse_shapes(graph)
        self.base_shapes = shapes
        self.shapes = shapes
        return shapes

    # ------------------------------------------------------------------
    # tasks
    # ------------------------------------------------------------------

    def extend_schema(self, instruction: str, extra_validators: Sequence[Validator] = ()) -> ShapeSet:
        if self.shapes is None or self.base_shapes is None:
            raise TaskOrderError("load the base shapes before extending the schema")
        if not instruction.strip():
            raise ValueError("instruction must not be empty")
        conv = Conversation(
            (
                system(prompts.persona()),
                user(
                    prompts.render(
                        "extend_schema",
                        instruction=instruction.strip(),
                        shapes=serialize_turtle(self.shapes.source),
                    )
                ),
            ),
            model_id=self.config.model_id,
        )
        return self._run_schema_task(conv, extra_validators)

    def correct_schema(self, correction: str, extra_validators: Sequence[Validator] = ()) -> ShapeSet:
        if self.shapes is None or self.base_shapes is None:
            raise TaskOrderError("load the base shapes before correcting the schema")
        if "schema" not in self.transcripts:
            raise TaskOrderError("no schema task to correct; run the extend step first")
        if not correction.strip():
            raise ValueError("correction must not be empty")
        conv = self.transcripts["schema"].add(user(correction.strip()))
        return self._run_schema_task(conv, extra_validators)

    def _run_schema_task(self, conv: Conversation, extra_validators: Sequence[Validator]) -> ShapeSet:
        validators = [schema_validator(self.base_shapes, self.config.schema_rules), *extra_validators]
        outcome = generate_validated(
            conv,
            validators,
            self.config.backend,
            max_retries=self.config.max_retries,
        )
        new_shapes = parse_shapes(outcome.artifact)
        previous = self.shapes
        assert previous is not None
        self.last_delta = shape_delta(previous, new_shapes)
        self.shapes = new_shapes
        self.transcripts["schema"] = outcome.transcript
        self._record("shapes", "schema", outcome)
        return new_shapes

    def create_instance(self, description: str) -> Graph:
        if self.shapes is None:
            raise TaskOrderError("extend or load the schema before creating an instance")
        if not description.strip():
            raise ValueError("description must not be empty")
        conv = Conversation(
            (
                system(prompts.persona()),
                user(
                    prompts.render(
                        "create_instance",
                        shapes=serialize_turtle(self.shapes.source),
                        description=description.strip(),
                    )
                ),
            ),
            model_id=self.config.model_id,
        )
        executor = make_executor(
            self.resolver,
            observer=lambda records: self.observed_pids.update(r.pid for r in records),
        )
        outcome = generate_validated(
            conv,
            [instance_validator(self.shapes, lambda: self.observed_pids)],
            self.config.backend,
            max_retries=self.config.max_retries,
            tools=(tool_definition(),),
            executor=executor,
            max_tool_turns=self.config.max_tool_turns,
        )
        self.instance = outcome.artifact
        self.transcripts["instance"] = outcome.transcript
        self._record("instance", "instance", outcome)
        return outcome.artifact

    def create_policy(self, constraint_description: str) -> Policy:
        if self.instance is None:
            raise TaskOrderError("create the instance before generating its policy")
        if not constraint_description.strip():
            raise ValueError("constraint description must not be empty")
        expected_iri = self._required_policy_iri()
        conv = Conversation(
            (
                system(prompts.persona()),
                user(
                    prompts.render(
                        "create_policy",
                        primer=prompts.odrl_primer(),
                        description=constraint_description.strip(),
                        instance=serialize_turtle(self.instance),
                    )
                ),
            ),
            model_id=self.config.model_id,
        )
        outcome = generate_validated(
            conv,
            [policy_validator(expected_iri)],
            self.config.backend,
            max_retries=self.config.max_retries,
        )
        self.policy = parse_policy(outcome.artifact)
        self.policy_graph = outcome.artifact
        self.transcripts["policy"] = outcome.transcript
        self._record("policy", "policy", outcome)
        return self.policy

    def _required_policy_iri(self) -> Iri:
        assert self.instance is not None
        objects = [t.object for t in self.instance.match(predicate=ODRL.hasPolicy)]
        iris = sorted({o for o in objects if isinstance(o, Iri)}, key=lambda i: i.value)
        if len(objects) != 1 or len(iris) != 1:
            raise ValueError(
                f"the instance must reference exactly one policy IRI via odrl:hasPolicy, found {len(objects)}"
            )
        return iris[0]

    def explain(self) -> str:
        if self.shapes is None or self.instance is None or self.policy_graph is None:
            raise TaskOrderError("explain needs shapes, instance, and policy to be present")
        # a fresh conversation: the explanation must stand on the artifacts alone
        conv = Conversation(
            (
                system(prompts.persona()),
                user(
                    prompts.render(
                        "explain",
                        shapes=serialize_turtle(self.shapes.source),
                        instance=serialize_turtle(self.instance),
                        policy=serialize_turtle(self.policy_graph),
                    )
                ),
            ),
            model_id=self.config.model_id,
        )
        response = complete(conv, (), self.config.backend)
        if not response.is_text:
            raise RuntimeError("backend returned tool calls for the explanation prompt")
        text = (response.text or "").strip()
        self.transcripts["explain"] = conv.add(assistant(text))
        explanation = text + "\n\n" + self._pid_footer()
        self.explanation = explanation
        self.provenance["explanation"] = {
            "model_id": self.config.model_id,
            "attempts": 1,
            "timestamp": self.config.clock(),
        }
        return explanation

    def _pid_footer(self) -> str:
        """Deterministic provenance footer: every PID literal with its source."""
        assert self.instance is not None
        lines = ["---", "Persistent identifiers in this instance:"]
        pid_triples = sorted(self.instance.match(predicate=GNDO.gndIdentifier), key=triple_sort_key)
        literals = [t.object.lexical for t in pid_triples if isinstance(t.object, Literal)]
        if not literals:
            lines.append("no persistent identifiers present")
        else:
            for value in literals:
                lines.append(
                    f"- {value} (gndo:gndIdentifier), resolved via the GND SPARQL endpoint "
                    f"<{self.config.sparql_cfg.endpoint_url}>"
                )
        return "\n".join(lines)

    # ------------------------------------------------------------------
    # export
    # ------------------------------------------------------------------

    def export(self) -> ArtifactSet:
        """Serialize whatever exists; every exported Turtle string re-parses."""
        shapes_turtle = serialize_turtle(self.shapes.source) if self.shapes is not None else None
        instance_turtle = serialize_turtle(self.instance) if self.instance is not None else None
        policy_turtle = serialize_turtle(self.policy_graph) if self.policy_graph is not None else None
        diagram_text = export_diagram(self.shapes) if self.shapes is not None else None
        for text in (shapes_turtle, instance_turtle, policy_turtle):
            if text is not None:
                parse_turtle(text)  # export must never hand out broken Turtle
        return ArtifactSet(
            shapes_turtle=shapes_turtle,
            instance_turtle=instance_turtle,
            policy_turtle=policy_turtle,
            explanation_text=self.explanation,
            diagram_text=diagram_text,
            provenance=dict(sorted(self.provenance.items())),
        )

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------

    def _record(self, artifact: str, task: str, outcome: RepairOutcome):
        self.repair_logs[task] = [r.to_dict() for r in outcome.repair_log]
        self.provenance[artifact] = {
            "model_id": self.config.model_id,
            "attempts": outcome.attempts,
            "timestamp": self.config.clock(),
        }
