"""Scripted end-to-end scenarios: the offline replay of a curator session.

A scenario file pins everything that could vary: the backend script, the
SPARQL fixtures, the base shapes, the clock, and the ordered task steps.
Running the same scenario twice yields byte-identical artifact sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..llm import ScriptedBackend, load_script
from ..pid import GND_DEFAULT_ENDPOINT, FixtureTransport, SparqlEndpointConfig
from .session import ArtifactSet, PipelineSession, SessionConfig
from .validators import SchemaRules

SCENARIO_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ScenarioStep:
    task: str
    instruction: str = ""


@dataclass(frozen=True)
class Scenario:
    name: str
    script_path: Path
    sparql_fixtures: Path
    base_shapes_path: Path
    steps: tuple[ScenarioStep, ...]
    model_id: str = "scripted-replay"
    clock_value: str = "1970-01-01T00:00:00+00:00"
    max_retries: int = 2
    sparql_endpoint: str = GND_DEFAULT_ENDPOINT
    schema_rules: SchemaRules | None = None

    def build_session(self, session_id: str | None = None) -> PipelineSession:
        config = SessionConfig(
            backend=ScriptedBackend(load_script(self.script_path)),
            model_id=self.model_id,
            sparql_cfg=SparqlEndpointConfig(endpoint_url=self.sparql_endpoint),
            sparql_transport=FixtureTransport(self.sparql_fixtures),
            max_retries=self.max_retries,
            schema_rules=self.schema_rules,
            clock=lambda: self.clock_value,
        )
        session = PipelineSession(config, session_id=session_id)
        session.load_base_shapes(self.base_shapes_path.read_text(encoding="utf-8"))
        return session


_TASKS_WITH_INSTRUCTION = {"extend_schema", "correct_schema", "create_instance", "create_policy"}


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema_version") != SCENARIO_SCHEMA_VERSION:
        raise ValueError(f"unsupported scenario schema_version: {data.get('schema_version')!r}")
    root = path.parent
    steps = []
    for raw in data["steps"]:
        task = raw["task"]
        if task not in _TASKS_WITH_INSTRUCTION and task != "explain":
            raise ValueError(f"unknown scenario task {task!r}")
        instruction = raw.get("instruction", "")
        if task in _TASKS_WITH_INSTRUCTION and not instruction.strip():
            raise ValueError(f"scenario step {task!r} needs an instruction")
        steps.append(ScenarioStep(task=task, instruction=instruction))
    rules = data.get("schema_rules")
    return Scenario(
        name=data.get("name", path.stem),
        script_path=root / data["script"],
        sparql_fixtures=root / data["sparql_fixtures"],
        base_shapes_path=root / data["base_shapes"],
        steps=tuple(steps),
        model_id=data.get("model_id", "scripted-replay"),
        clock_value=data.get("clock", "1970-01-01T00:00:00+00:00"),
        max_retries=data.get("max_retries", 2),
        sparql_endpoint=data.get("sparql_endpoint", GND_DEFAULT_ENDPOINT),
        schema_rules=SchemaRules.from_dict(rules) if rules else None,
    )


def run_scenario(scenario: Scenario, session_id: str | None = None) -> tuple[PipelineSession, ArtifactSet]:
    session = scenario.build_session(session_id=session_id)
    for step in scenario.steps:
        if step.task == "extend_schema":
            session.extend_schema(step.instruction)
        elif step.task == "correct_schema":
            session.correct_schema(step.instruction)
        elif step.task == "create_instance":
            session.create_instance(step.instruction)
        elif step.task == "create_policy":
            session.create_policy(step.instruction)
        else:
            session.explain()
    return session, session.export()
