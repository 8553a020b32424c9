import json

from fairmeta import fixtures
from fairmeta.pipeline import load_scenario, load_session, run_scenario, save_session


def test_save_and_load_roundtrip(tmp_path):
    scenario = load_scenario(fixtures.DEMO_SCENARIO)
    session, artifacts = run_scenario(scenario)
    directory = save_session(session, tmp_path)
    assert (directory / "session.json").exists()
    assert (directory / "shapes.ttl").exists()
    assert (directory / "instance.ttl").exists()
    assert (directory / "policy.ttl").exists()
    assert (directory / "explanation.txt").exists()
    assert (directory / "diagram.puml").exists()

    restored = load_session(directory, scenario.build_session().config)
    assert restored.id == session.id
    assert restored.export().to_dict() == artifacts.to_dict()
    assert restored.policy == session.policy
    assert restored.transcripts.keys() == session.transcripts.keys()
    assert restored.observed_pids == session.observed_pids


def test_session_json_is_versioned_and_stable(tmp_path):
    scenario = load_scenario(fixtures.DEMO_SCENARIO)
    session, _ = run_scenario(scenario, session_id="fixed-id")
    directory = save_session(session, tmp_path)
    with open(directory / "session.json", encoding="utf-8") as fh:
        metadata = json.load(fh)
    assert metadata["schema_version"] == 1
    assert metadata["id"] == "fixed-id"
    assert "transcripts" in metadata and "provenance" in metadata

    session2, _ = run_scenario(scenario, session_id="fixed-id")
    directory2 = save_session(session2, tmp_path / "again")
    assert (directory / "session.json").read_text() == (directory2 / "session.json").read_text()


def test_partial_session_persists_only_present_artifacts(tmp_path):
    scenario = load_scenario(fixtures.DEMO_SCENARIO)
    session = scenario.build_session()
    steps = {s.task: s.instruction for s in scenario.steps}
    session.extend_schema(steps["extend_schema"])
    directory = save_session(session, tmp_path)
    assert (directory / "shapes.ttl").exists()
    assert not (directory / "instance.ttl").exists()
    restored = load_session(directory, scenario.build_session().config)
    assert restored.instance is None
    assert restored.shapes is not None
