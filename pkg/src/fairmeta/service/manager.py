"""Session lifecycle for the service: creation, locking, lazy loading, persistence.

Requests targeting the same session are serialized through a per-session
lock (single-writer); distinct sessions proceed in parallel. Every
successful mutation is persisted write-then-rename before the response
goes out, so a restart loses nothing that was committed.
"""

from __future__ import annotations

import threading
from pathlib import Path

from ..llm import HttpBackend, BackendConfig, ScriptedBackend, load_script
from ..pid import FixtureTransport, HttpSparqlTransport, SparqlEndpointConfig
from ..pipeline import PipelineSession, SessionConfig, load_session, save_session
from .config import ServiceConfig


class SessionNotFoundError(KeyError):
    pass


class SessionManager:
    def __init__(self, config: ServiceConfig):
        self.config = config
        self.sessions_dir = Path(config.sessions_dir)
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, PipelineSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _session_config(self) -> SessionConfig:
        sparql_cfg = SparqlEndpointConfig(endpoint_url=self.config.sparql_endpoint)
        if self.config.mode == "fixture":
            assert self.config.script and self.config.fixtures_dir
            backend = ScriptedBackend(load_script(self.config.script))
            transport = FixtureTransport(self.config.fixtures_dir)
        else:
            backend = HttpBackend(
                BackendConfig(
                    base_url=self.config.backend_url or "",
                    model_id=self.config.model_id,
                    api_key=self.config.api_key,
                )
            )
            transport = HttpSparqlTransport()
        return SessionConfig(
            backend=backend,
            model_id=self.config.model_id,
            sparql_cfg=sparql_cfg,
            sparql_transport=transport,
            max_retries=self.config.max_retries,
        )

    def create(self, base_shapes_turtle: str) -> PipelineSession:
        session = PipelineSession(self._session_config())
        session.load_base_shapes(base_shapes_turtle)
        with self._registry_lock:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        save_session(session, self.sessions_dir)
        return session

    def get(self, session_id: str) -> PipelineSession:
        with self._registry_lock:
            if session_id in self._sessions:
                return self._sessions[session_id]
        directory = self.sessions_dir / session_id
        if not (directory / "session.json").exists():
            raise SessionNotFoundError(session_id)
        session = load_session(directory, self._session_config())
        with self._registry_lock:
            self._sessions.setdefault(session_id, session)
            self._locks.setdefault(session_id, threading.Lock())
            return self._sessions[session_id]

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            if session_id not in self._locks:
                self._locks[session_id] = threading.Lock()
            return self._locks[session_id]

    def persist(self, session: PipelineSession):
        save_session(session, self.sessions_dir)

    def list_ids(self) -> list[str]:
        on_disk = {p.name for p in self.sessions_dir.iterdir() if (p / "session.json").exists()}
        with self._registry_lock:
            return sorted(on_disk | set(self._sessions))
