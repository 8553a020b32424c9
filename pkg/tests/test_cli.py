import json
import subprocess
import sys
from pathlib import Path

from fairmeta import fixtures

PKG_ROOT = Path(__file__).resolve().parent.parent


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "fairmeta.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=PKG_ROOT,
    )


class TestValidate:
    def test_conforming_instance_exit_zero(self):
        result = run_cli("validate", str(fixtures.INSTANCE), "--shapes", str(fixtures.CORRECTED_SHAPES))
        assert result.returncode == 0
        assert "conforms" in result.stdout

    def test_nonconforming_exit_one(self, tmp_path):
        broken = tmp_path / "broken.ttl"
        broken.write_text(
            "\n".join(line for line in fixtures.read(fixtures.INSTANCE).splitlines() if "title" not in line),
            encoding="utf-8",
        )
        result = run_cli("validate", str(broken), "--shapes", str(fixtures.CORRECTED_SHAPES))
        assert result.returncode == 1
        assert "does not conform" in result.stdout

    def test_missing_file_exit_two(self):
        result = run_cli("validate", "/nonexistent.ttl", "--shapes", str(fixtures.BASE_SHAPES))
        assert result.returncode == 2


class TestPolicyEval:
    def test_permit(self):
        result = run_cli(
            "policy-eval", str(fixtures.POLICY), "--country", "DE", "--at", "2024-01-01T00:00:00", "--action", "use"
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "Permit"

    def test_deny_country(self):
        result = run_cli(
            "policy-eval", str(fixtures.POLICY), "--country", "FR", "--at", "2024-01-01T00:00:00"
        )
        assert result.returncode == 1
        assert result.stdout.splitlines()[0] == "Deny"

    def test_deny_deadline(self):
        result = run_cli(
            "policy-eval", str(fixtures.POLICY), "--country", "DE", "--at", "2024-06-01T00:00:00"
        )
        assert result.returncode == 1

    def test_bad_timestamp_exit_two(self):
        result = run_cli("policy-eval", str(fixtures.POLICY), "--country", "DE", "--at", "soonish")
        assert result.returncode == 2


class TestResolvePid:
    def test_fixture_mode_lookup(self):
        result = run_cli(
            "resolve-pid", "Caspar David Friedrich", "--fixtures", str(fixtures.SPARQL_DIR)
        )
        assert result.returncode == 0
        assert "118535889" in result.stdout

    def test_no_match_exit_one(self):
        result = run_cli("resolve-pid", "Zzzz Nonexistent Painter", "--fixtures", str(fixtures.SPARQL_DIR))
        assert result.returncode == 1
        assert "no match found" in result.stdout

    def test_empty_name_exit_two(self):
        result = run_cli("resolve-pid", "  ", "--fixtures", str(fixtures.SPARQL_DIR))
        assert result.returncode == 2


class TestDiagram:
    def test_diagram_to_stdout(self):
        result = run_cli("diagram", str(fixtures.CORRECTED_SHAPES))
        assert result.returncode == 0
        assert result.stdout.startswith("@startuml")
        assert "PersonShape" in result.stdout


class TestSessionRun:
    def test_scenario_end_to_end(self, tmp_path):
        result = run_cli(
            "session", "run", str(fixtures.DEMO_SCENARIO), "--out", str(tmp_path), "--session-id", "cli-test"
        )
        assert result.returncode == 0, result.stderr
        session_dir = tmp_path / "cli-test"
        for name in ("session.json", "shapes.ttl", "instance.ttl", "policy.ttl", "explanation.txt", "diagram.puml"):
            assert (session_dir / name).exists(), name
        metadata = json.loads((session_dir / "session.json").read_text(encoding="utf-8"))
        assert metadata["schema_version"] == 1

    def test_bad_scenario_exit_two(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{}", encoding="utf-8")
        result = run_cli("session", "run", str(bad))
        assert result.returncode == 2


class TestUsage:
    def test_unknown_command_exit_two(self):
        result = run_cli("frobnicate")
        assert result.returncode == 2

    def test_missing_required_option_exit_two(self):
        result = run_cli("validate", str(fixtures.INSTANCE))
        assert result.returncode == 2
