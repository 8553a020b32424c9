"""Tool-calling loop: complete, execute tool calls, feed results back."""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .backend import Backend, complete
from .messages import Conversation, ToolDefinition, assistant, tool_result

ToolExecutor = Mapping[str, Callable[[dict], str]]


class MaxTurnsExceededError(Exception):
    def __init__(self, max_turns: int, transcript: Conversation):
        self.transcript = transcript
        super().__init__(f"backend kept requesting tools for {max_turns} turns without a final answer")


def run_tool_loop(
    conv: Conversation,
    tools: Sequence[ToolDefinition],
    executor: ToolExecutor,
    backend: Backend,
    max_turns: int = 8,
) -> tuple[str, Conversation]:
    """Drive the backend until it answers with text.

    Returns (final_text, transcript); the transcript contains every
    message including tool results. A call to an unregistered tool is
    answered with an "unknown tool" tool message and the loop continues.
    """
    if max_turns < 1:
        raise ValueError("max_turns must be at least 1")
    for tool in tools:
        if tool.name not in executor:
            raise ValueError(f"tool {tool.name!r} has no executor binding")
    transcript = conv
    for _ in range(max_turns):
        response = complete(transcript, tools, backend)
        if response.is_text:
            assert response.text is not None
            transcript = transcript.add(assistant(response.text))
            return response.text, transcript
        assert response.tool_calls is not None
        transcript = transcript.add(assistant(tool_calls=response.tool_calls))
        for call in response.tool_calls:  # sequential, in listed order
            if call.name not in executor:
                transcript = transcript.add(tool_result(call.id, f"unknown tool: {call.name}"))
                continue
            try:
                arguments = call.parsed_arguments()
            except ValueError as exc:
                transcript = transcript.add(tool_result(call.id, f"invalid tool arguments: {exc}"))
                continue
            transcript = transcript.add(tool_result(call.id, executor[call.name](arguments)))
    raise MaxTurnsExceededError(max_turns, transcript)
