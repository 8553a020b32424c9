"""Canonical fixtures: shapes, instance, policy, backend scripts, SPARQL results.

These files are the reference artifacts the replay scenario and the test
suite compare against, shipped as package data so fixture mode works from
any install.
"""

from __future__ import annotations

from pathlib import Path

FIXTURES_DIR = Path(__file__).resolve().parent

BASE_SHAPES = FIXTURES_DIR / "shapes" / "base.ttl"
FAULTY_SHAPES = FIXTURES_DIR / "shapes" / "extended_faulty.ttl"
CORRECTED_SHAPES = FIXTURES_DIR / "shapes" / "extended_corrected.ttl"
INSTANCE = FIXTURES_DIR / "instance" / "instance.ttl"
POLICY = FIXTURES_DIR / "policy" / "policy.ttl"
SPARQL_DIR = FIXTURES_DIR / "sparql"
SCRIPTS_DIR = FIXTURES_DIR / "scripts"
SCENARIOS_DIR = FIXTURES_DIR / "scenarios"
DEMO_SCENARIO = SCENARIOS_DIR / "demo_scenario.json"


def read(path: Path) -> str:
    return path.read_text(encoding="utf-8")
