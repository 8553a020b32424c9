"""Session persistence: one directory per session.

Layout: session.json (metadata, transcripts, provenance, repair logs)
plus one file per artifact (shapes.ttl, instance.ttl, policy.ttl,
explanation.txt, diagram.puml). Writes are write-then-rename atomic so a
crash never leaves a half-written session behind.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from ..llm import Conversation
from ..odrl import parse_policy
from ..rdf import parse_turtle
from ..shacl import parse_shapes
from .session import PipelineSession, SessionConfig

SCHEMA_VERSION = 1

_ARTIFACT_FILES = {
    "shapes": "shapes.ttl",
    "instance": "instance.ttl",
    "policy": "policy.ttl",
    "explanation": "explanation.txt",
    "diagram": "diagram.puml",
}


def _atomic_write(path: Path, content: str):
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_session(session: PipelineSession, sessions_dir: str | Path) -> Path:
    directory = Path(sessions_dir) / session.id
    directory.mkdir(parents=True, exist_ok=True)
    artifacts = session.export()
    if artifacts.shapes_turtle is not None:
        _atomic_write(directory / _ARTIFACT_FILES["shapes"], artifacts.shapes_turtle)
    if artifacts.instance_turtle is not None:
        _atomic_write(directory / _ARTIFACT_FILES["instance"], artifacts.instance_turtle)
    if artifacts.policy_turtle is not None:
        _atomic_write(directory / _ARTIFACT_FILES["policy"], artifacts.policy_turtle)
    if artifacts.explanation_text is not None:
        _atomic_write(directory / _ARTIFACT_FILES["explanation"], artifacts.explanation_text)
    if artifacts.diagram_text is not None:
        _atomic_write(directory / _ARTIFACT_FILES["diagram"], artifacts.diagram_text)
    base_shapes_turtle = None
    if session.base_shapes is not None:
        from ..rdf import serialize_turtle

        base_shapes_turtle = serialize_turtle(session.base_shapes.source)
    metadata = {
        "schema_version": SCHEMA_VERSION,
        "id": session.id,
        "created_at": session.created_at,
        "model_id": session.config.model_id,
        "base_shapes_turtle": base_shapes_turtle,
        "transcripts": {task: conv.to_wire() for task, conv in session.transcripts.items()},
        "repair_logs": session.repair_logs,
        "provenance": session.provenance,
        "observed_pids": sorted(session.observed_pids),
        "last_delta": session.last_delta.to_dict() if session.last_delta is not None else None,
    }
    _atomic_write(directory / "session.json", json.dumps(metadata, indent=2, ensure_ascii=False, sort_keys=True))
    return directory


def load_session(directory: str | Path, config: SessionConfig) -> PipelineSession:
    directory = Path(directory)
    with open(directory / "session.json", encoding="utf-8") as fh:
        metadata = json.load(fh)
    if metadata.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported session schema_version: {metadata.get('schema_version')!r}")
    session = PipelineSession(config, session_id=metadata["id"])
    session.created_at = metadata.get("created_at", session.created_at)
    if metadata.get("base_shapes_turtle"):
        session.base_shapes = parse_shapes(parse_turtle(metadata["base_shapes_turtle"]))
        session.shapes = session.base_shapes
    shapes_path = directory / _ARTIFACT_FILES["shapes"]
    if shapes_path.exists():
        session.shapes = parse_shapes(parse_turtle(shapes_path.read_text(encoding="utf-8")))
        if session.base_shapes is None:
            session.base_shapes = session.shapes
    instance_path = directory / _ARTIFACT_FILES["instance"]
    if instance_path.exists():
        session.instance = parse_turtle(instance_path.read_text(encoding="utf-8"))
    policy_path = directory / _ARTIFACT_FILES["policy"]
    if policy_path.exists():
        session.policy_graph = parse_turtle(policy_path.read_text(encoding="utf-8"))
        session.policy = parse_policy(session.policy_graph)
    explanation_path = directory / _ARTIFACT_FILES["explanation"]
    if explanation_path.exists():
        session.explanation = explanation_path.read_text(encoding="utf-8")
    session.transcripts = {
        task: Conversation.from_wire(wire) for task, wire in metadata.get("transcripts", {}).items()
    }
    session.repair_logs = metadata.get("repair_logs", {})
    session.provenance = metadata.get("provenance", {})
    session.observed_pids = set(metadata.get("observed_pids", []))
    return session
