"""Deterministic scripted backend: the replayable stand-in for a live model.

A script is an ordered list of steps. Each step pairs a matcher (exact
text, substring, or regex, applied to the latest user/tool message) with a
canned response. complete() consumes the first unconsumed step whose
matcher matches; steps marked repeatable are never consumed. Identical
scripts and conversations always yield identical transcripts.

Script file format (JSON):

    [
      {
        "match": {"substring": "extend the SHACL shapes"},
        "response": {"text": "```turtle\\n...\\n```"},
        "repeatable": false
      },
      {
        "match": {"regex": ".*"},
        "response": {"tool_calls": [
          {"id": "call_1", "name": "lookup_gnd_id",
           "arguments": "{\\"name\\": \\"Caspar David Friedrich\\"}"}
        ]}
      }
    ]
"""

from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .backend import BackendUnavailableError
from .messages import BackendResponse, Conversation, ToolCall, ToolDefinition

_MATCH_KINDS = ("exact", "substring", "regex")


@dataclass(frozen=True)
class Matcher:
    kind: str
    pattern: str

    def __post_init__(self):
        if self.kind not in _MATCH_KINDS:
            raise ValueError(f"matcher kind must be one of {_MATCH_KINDS}, got {self.kind!r}")
        if self.kind == "regex":
            re.compile(self.pattern)  # fail fast on a bad script

    def matches(self, text: str) -> bool:
        if self.kind == "exact":
            return text == self.pattern
        if self.kind == "substring":
            return self.pattern in text
        return re.search(self.pattern, text, re.DOTALL) is not None


@dataclass(frozen=True)
class ScriptStep:
    matcher: Matcher
    response: BackendResponse
    repeatable: bool = False


class ScriptedBackend:
    def __init__(self, script: Sequence[ScriptStep]):
        self.script = list(script)
        self._consumed = [False] * len(self.script)
        self._lock = threading.Lock()

    def complete(self, conv: Conversation, tools: Sequence[ToolDefinition] = ()) -> BackendResponse:
        latest = conv.last_user_or_tool()
        text = latest.content if latest is not None else ""
        with self._lock:
            any_left = False
            for i, step in enumerate(self.script):
                if self._consumed[i]:
                    continue
                any_left = True
                if step.matcher.matches(text):
                    if not step.repeatable:
                        self._consumed[i] = True
                    return step.response
            if not any_left:
                raise BackendUnavailableError("script exhausted")
            raise BackendUnavailableError(
                f"no script step matches the latest message (starts with {text[:80]!r})"
            )

    def reset(self):
        with self._lock:
            self._consumed = [False] * len(self.script)


def _matcher_from_json(data: dict) -> Matcher:
    keys = [k for k in _MATCH_KINDS if k in data]
    if len(keys) != 1:
        raise ValueError(f"matcher must have exactly one of {_MATCH_KINDS}, got {sorted(data)}")
    return Matcher(kind=keys[0], pattern=data[keys[0]])


def _response_from_json(data: dict) -> BackendResponse:
    if "text" in data:
        return BackendResponse(text=data["text"])
    if "tool_calls" in data:
        calls = tuple(
            ToolCall(id=tc["id"], name=tc["name"], arguments=tc["arguments"]) for tc in data["tool_calls"]
        )
        return BackendResponse(tool_calls=calls)
    raise ValueError("script response needs either 'text' or 'tool_calls'")


def parse_script(data: list) -> list[ScriptStep]:
    steps = []
    for entry in data:
        steps.append(
            ScriptStep(
                matcher=_matcher_from_json(entry["match"]),
                response=_response_from_json(entry["response"]),
                repeatable=bool(entry.get("repeatable", False)),
            )
        )
    return steps


def load_script(path: str | Path) -> list[ScriptStep]:
    with open(path, encoding="utf-8") as fh:
        return parse_script(json.load(fh))


def scripted_backend(script: Sequence[ScriptStep]) -> ScriptedBackend:
    return ScriptedBackend(script)
