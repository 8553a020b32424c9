"""Concurrency contracts: scripted-step consumption and the PID cache."""

import threading

from fairmeta import fixtures
from fairmeta.llm import (
    BackendResponse,
    BackendUnavailableError,
    Conversation,
    Matcher,
    ScriptStep,
    ScriptedBackend,
    user,
)
from fairmeta.pid import FixtureTransport, PidResolver, SparqlEndpointConfig


def test_scripted_backend_serves_each_step_exactly_once_under_contention():
    steps = [
        ScriptStep(Matcher("regex", ".*"), BackendResponse(text=f"answer-{i}")) for i in range(16)
    ]
    backend = ScriptedBackend(steps)
    conv = Conversation((user("go"),), model_id="m")
    results: list[str] = []
    errors: list[Exception] = []
    lock = threading.Lock()

    def worker():
        try:
            response = backend.complete(conv)
            with lock:
                results.append(response.text)
        except BackendUnavailableError as exc:
            with lock:
                errors.append(exc)

    threads = [threading.Thread(target=worker) for _ in range(20)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    # 16 steps for 20 callers: every step consumed once, the rest error
    assert sorted(results) == sorted(f"answer-{i}" for i in range(16))
    assert len(errors) == 4


def test_pid_cache_consistent_under_concurrent_callers():
    calls = []
    inner = FixtureTransport(fixtures.SPARQL_DIR)

    class CountingTransport:
        def execute(self, query, cfg):
            calls.append(query)
            return inner.execute(query, cfg)

    resolver = PidResolver(
        SparqlEndpointConfig(endpoint_url="https://gnd.example.org/sparql"), CountingTransport()
    )
    results = []
    lock = threading.Lock()

    def worker():
        records = resolver.resolve("Caspar David Friedrich")
        with lock:
            results.append(tuple(r.pid for r in records))

    threads = [threading.Thread(target=worker) for _ in range(12)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert set(results) == {("118535889",)}  # every caller sees the same records
    assert len(calls) <= 12  # racing first calls allowed, later ones served from cache
    assert len(calls) >= 1
