"""The PID lookup exposed as an LLM-callable tool."""

from __future__ import annotations

import json
from typing import Callable

from ..llm import ToolDefinition, ToolParam
from .query import EmptyNameError
from .resolver import PidResolver

TOOL_NAME = "lookup_gnd_id"
NO_MATCH_MESSAGE = "no match found"


def tool_definition() -> ToolDefinition:
    return ToolDefinition(
        name=TOOL_NAME,
        description=(
            "Look up the GND identifier for a person by name. The GND id is a "
            "unique persistent identifier (PID); call this whenever a persistent "
            "identifier for a person such as a painter is needed."
        ),
        parameters=(
            ToolParam(
                name="name",
                type="string",
                description="The person's full name, e.g. 'Caspar David Friedrich'",
                required=True,
            ),
        ),
    )


def format_records(records) -> str:
    if not records:
        return NO_MATCH_MESSAGE
    payload = [
        {"name": r.label, "gnd_id": r.pid, "entity": r.entity_iri} for r in records
    ]
    return json.dumps(payload, ensure_ascii=False)


def make_executor(resolver: PidResolver, observer: Callable[[list], None] | None = None) -> dict:
    """Executor binding for run_tool_loop; observer sees every result list."""

    def lookup(arguments: dict) -> str:
        name = arguments.get("name", "")
        if not isinstance(name, str) or not name.strip():
            return "error: the 'name' argument must be a non-empty string"
        try:
            records = resolver.resolve(name)
        except EmptyNameError:
            return "error: the 'name' argument must be a non-empty string"
        if observer is not None:
            observer(records)
        return format_records(records)

    return {TOOL_NAME: lookup}
