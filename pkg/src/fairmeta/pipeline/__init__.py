"""Curator pipeline: validated schema/instance/policy generation with repair loops."""

from .extract import extract_code_block
from .repair import (
    RepairExhaustedError,
    RepairOutcome,
    RepairRound,
    Validator,
    generate_validated,
)
from .scenario import Scenario, ScenarioStep, load_scenario, run_scenario
from .session import ArtifactSet, PipelineSession, SessionConfig, TaskOrderError, utc_now_iso
from .store import load_session, save_session
from .validators import SchemaRules, instance_validator, policy_validator, schema_validator

__all__ = [
    "ArtifactSet",
    "PipelineSession",
    "RepairExhaustedError",
    "RepairOutcome",
    "RepairRound",
    "Scenario",
    "ScenarioStep",
    "SchemaRules",
    "SessionConfig",
    "TaskOrderError",
    "Validator",
    "extract_code_block",
    "generate_validated",
    "instance_validator",
    "load_scenario",
    "load_session",
    "policy_validator",
    "run_scenario",
    "save_session",
    "schema_validator",
    "utc_now_iso",
]
