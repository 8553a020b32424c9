"""Persistent-identifier resolution over the SPARQL 1.1 protocol.

Transports share one contract: execute(query, cfg) -> parsed SPARQL JSON
results. The fixture transport replays recorded responses keyed by a
content hash of the query, so every pipeline test runs without network;
the recording transport wraps a live one and writes those files.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import requests

from .query import build_lookup_query

#: public GND SPARQL endpoint (ZBW mirror); a documented default, always overridable
GND_DEFAULT_ENDPOINT = "https://zbw.eu/beta/sparql/gnd/query"

_PID_RE = re.compile(r"^[0-9X-]+$")
_POST_THRESHOLD = 1500  # bytes of query text before switching to POST form


class PidError(Exception):
    pass


class EndpointUnreachableError(PidError):
    pass


class SparqlTimeoutError(PidError):
    pass


class MalformedResultsError(PidError):
    pass


@dataclass(frozen=True)
class SparqlEndpointConfig:
    endpoint_url: str
    timeout: float = 30.0
    retries: int = 2

    def __post_init__(self):
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.retries < 0:
            raise ValueError("retries must be non-negative")


@dataclass(frozen=True)
class PidRecord:
    label: str  # the person's preferred name as bound by the query
    pid: str
    source_endpoint: str
    entity_iri: str | None = None

    def __post_init__(self):
        if not self.pid or not _PID_RE.match(self.pid):
            raise ValueError(
                f"GND identifiers contain only digits, uppercase X, and hyphens; got {self.pid!r}"
            )


class SparqlTransport(Protocol):
    def execute(self, query: str, cfg: SparqlEndpointConfig) -> dict:
        ...


def query_fingerprint(query: str) -> str:
    return hashlib.sha256(query.encode("utf-8")).hexdigest()


class HttpSparqlTransport:
    """SPARQL 1.1 protocol client: GET with a query parameter, POST form for long queries."""

    def __init__(self, session: requests.Session | None = None):
        self.session = session or requests.Session()
        self.session.headers.setdefault("Accept", "application/sparql-results+json")

    def execute(self, query: str, cfg: SparqlEndpointConfig) -> dict:
        last_error: Exception | None = None
        for _ in range(cfg.retries + 1):
            try:
                if len(query.encode("utf-8")) > _POST_THRESHOLD:
                    response = self.session.post(
                        cfg.endpoint_url,
                        data={"query": query},
                        timeout=cfg.timeout,
                    )
                else:
                    response = self.session.get(
                        cfg.endpoint_url,
                        params={"query": query},
                        timeout=cfg.timeout,
                    )
            except requests.Timeout as exc:
                last_error = SparqlTimeoutError(f"SPARQL endpoint timed out after {cfg.timeout}s")
                last_error.__cause__ = exc
                continue
            except requests.RequestException as exc:
                last_error = EndpointUnreachableError(f"SPARQL request failed: {exc}")
                continue
            if response.status_code >= 500:
                last_error = EndpointUnreachableError(
                    f"SPARQL endpoint returned HTTP {response.status_code}"
                )
                continue
            if response.status_code >= 400:
                raise EndpointUnreachableError(
                    f"SPARQL endpoint rejected the request: HTTP {response.status_code}: {response.text[:300]}"
                )
            try:
                return response.json()
            except ValueError as exc:
                raise MalformedResultsError(f"endpoint did not return JSON: {exc}") from None
        assert last_error is not None
        raise last_error


class FixtureTransport:
    """Replays recorded SPARQL JSON results from a directory keyed by query hash."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def execute(self, query: str, cfg: SparqlEndpointConfig) -> dict:
        path = self.directory / f"{query_fingerprint(query)}.json"
        if not path.exists():
            raise EndpointUnreachableError(
                f"no recorded fixture for this query (expected {path.name}); "
                f"run in recording mode against a live endpoint first"
            )
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)


class RecordingTransport:
    """Wraps a live transport and writes each response as a fixture file."""

    def __init__(self, live: SparqlTransport, directory: str | Path):
        self.live = live
        self.directory = Path(directory)

    def execute(self, query: str, cfg: SparqlEndpointConfig) -> dict:
        result = self.live.execute(query, cfg)
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.directory / f"{query_fingerprint(query)}.json"
        path.write_text(json.dumps(result, indent=2, ensure_ascii=False), encoding="utf-8")
        return result


def _parse_results(data: dict, name: str, cfg: SparqlEndpointConfig) -> list[PidRecord]:
    try:
        bindings = data["results"]["bindings"]
    except (KeyError, TypeError):
        raise MalformedResultsError("missing results.bindings in SPARQL JSON") from None
    records = []
    for binding in bindings:
        try:
            pid = binding["id"]["value"]
        except (KeyError, TypeError):
            raise MalformedResultsError(f"binding without an ?id value: {binding!r}") from None
        label = binding.get("name", {}).get("value", name)
        entity = binding.get("entity", {}).get("value")
        try:
            records.append(
                PidRecord(label=label, pid=pid, source_endpoint=cfg.endpoint_url, entity_iri=entity)
            )
        except ValueError as exc:
            raise MalformedResultsError(str(exc)) from None
    records.sort(key=lambda r: (r.label != name, r.pid))  # exact name matches first
    return records


def resolve_pid(name: str, cfg: SparqlEndpointConfig, transport: SparqlTransport) -> list[PidRecord]:
    """Resolve a person name to GND identifier records; empty list means no match."""
    query = build_lookup_query(name)
    return _parse_results(transport.execute(query, cfg), name.strip(), cfg)


class PidResolver:
    """resolve_pid plus an in-memory (endpoint, name) cache for the session.

    Repair loops re-invoke the lookup tool with the same names; GND data
    is stable at session timescale, so one round trip per name suffices.
    """

    def __init__(self, cfg: SparqlEndpointConfig, transport: SparqlTransport):
        self.cfg = cfg
        self.transport = transport
        self._cache: dict[tuple[str, str], list[PidRecord]] = {}
        self._lock = threading.Lock()

    def resolve(self, name: str) -> list[PidRecord]:
        key = (self.cfg.endpoint_url, name.strip())
        with self._lock:
            if key in self._cache:
                return list(self._cache[key])
        records = resolve_pid(name, self.cfg, self.transport)
        with self._lock:
            self._cache[key] = records
        return list(records)
