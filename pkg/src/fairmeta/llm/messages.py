"""Chat message model and the JSON wire format shared by all backends.

The wire format is the de-facto chat-completions shape (role/content
messages, tool_calls with JSON-string arguments, function-style tool
schemas), so hosted APIs and self-hosted open models are interchangeable.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass


class Role(enum.Enum):
    SYSTEM = "system"
    USER = "user"
    ASSISTANT = "assistant"
    TOOL = "tool"


class MalformedResponseError(Exception):
    """Wire payload does not match the expected chat-completions shape."""


@dataclass(frozen=True)
class ToolCall:
    id: str
    name: str
    arguments: str  # JSON object text, exactly as the model emitted it

    def parsed_arguments(self) -> dict:
        try:
            value = json.loads(self.arguments)
        except json.JSONDecodeError as exc:
            raise ValueError(f"tool call arguments are not valid JSON: {exc}") from None
        if not isinstance(value, dict):
            raise ValueError("tool call arguments must be a JSON object")
        return value

    def to_wire(self) -> dict:
        return {"id": self.id, "type": "function", "function": {"name": self.name, "arguments": self.arguments}}

    @classmethod
    def from_wire(cls, data: dict) -> "ToolCall":
        try:
            return cls(id=data["id"], name=data["function"]["name"], arguments=data["function"]["arguments"])
        except (KeyError, TypeError) as exc:
            raise MalformedResponseError(f"malformed tool call: {exc}") from None


@dataclass(frozen=True)
class ChatMessage:
    role: Role
    content: str = ""
    tool_calls: tuple[ToolCall, ...] = ()
    tool_call_id: str | None = None

    def __post_init__(self):
        if self.tool_calls and self.role is not Role.ASSISTANT:
            raise ValueError("only assistant messages may carry tool calls")
        if self.role is Role.TOOL and not self.tool_call_id:
            raise ValueError("tool messages must reference a tool_call_id")
        if self.role is not Role.TOOL and self.tool_call_id is not None:
            raise ValueError("tool_call_id is only valid on tool messages")
        if not self.content and not self.tool_calls:
            raise ValueError(f"{self.role.value} message content must not be empty")

    def to_wire(self) -> dict:
        out: dict = {"role": self.role.value, "content": self.content}
        if self.tool_calls:
            out["tool_calls"] = [tc.to_wire() for tc in self.tool_calls]
        if self.tool_call_id is not None:
            out["tool_call_id"] = self.tool_call_id
        return out

    @classmethod
    def from_wire(cls, data: dict) -> "ChatMessage":
        try:
            role = Role(data["role"])
        except (KeyError, ValueError) as exc:
            raise MalformedResponseError(f"malformed message role: {exc}") from None
        tool_calls = tuple(ToolCall.from_wire(tc) for tc in data.get("tool_calls", []))
        return cls(
            role=role,
            content=data.get("content") or "",
            tool_calls=tool_calls,
            tool_call_id=data.get("tool_call_id"),
        )


def system(content: str) -> ChatMessage:
    return ChatMessage(Role.SYSTEM, content)


def user(content: str) -> ChatMessage:
    return ChatMessage(Role.USER, content)


def assistant(content: str = "", tool_calls: tuple[ToolCall, ...] = ()) -> ChatMessage:
    return ChatMessage(Role.ASSISTANT, content, tool_calls=tool_calls)


def tool_result(tool_call_id: str, content: str) -> ChatMessage:
    return ChatMessage(Role.TOOL, content or "(empty tool result)", tool_call_id=tool_call_id)


@dataclass(frozen=True)
class Conversation:
    messages: tuple[ChatMessage, ...] = ()
    model_id: str = ""

    def __post_init__(self):
        for i, message in enumerate(self.messages):
            if message.role is Role.SYSTEM and i != 0:
                raise ValueError("a system message may only appear at index 0")
            if (
                i > 0
                and message.role is Role.ASSISTANT
                and self.messages[i - 1].role is Role.ASSISTANT
            ):
                raise ValueError("two consecutive assistant messages need an interleaved user/tool message")

    def add(self, *messages: ChatMessage) -> "Conversation":
        return Conversation(self.messages + tuple(messages), self.model_id)

    def last(self) -> ChatMessage | None:
        return self.messages[-1] if self.messages else None

    def last_user_or_tool(self) -> ChatMessage | None:
        for message in reversed(self.messages):
            if message.role in (Role.USER, Role.TOOL):
                return message
        return None

    def to_wire(self) -> dict:
        return {"model": self.model_id, "messages": [m.to_wire() for m in self.messages]}

    @classmethod
    def from_wire(cls, data: dict) -> "Conversation":
        return cls(
            messages=tuple(ChatMessage.from_wire(m) for m in data.get("messages", [])),
            model_id=data.get("model", ""),
        )


_TOOL_NAME_RE = re.compile(r"^[a-zA-Z0-9_-]+$")
_PARAM_TYPES = ("string", "number", "boolean")


@dataclass(frozen=True)
class ToolParam:
    name: str
    type: str = "string"
    description: str = ""
    required: bool = False

    def __post_init__(self):
        if self.type not in _PARAM_TYPES:
            raise ValueError(f"parameter type must be one of {_PARAM_TYPES}, got {self.type!r}")


@dataclass(frozen=True)
class ToolDefinition:
    name: str
    description: str = ""
    parameters: tuple[ToolParam, ...] = ()

    def __post_init__(self):
        if not _TOOL_NAME_RE.match(self.name):
            raise ValueError(f"tool name must match [a-zA-Z0-9_-]+, got {self.name!r}")

    def to_wire(self) -> dict:
        return {
            "type": "function",
            "function": {
                "name": self.name,
                "description": self.description,
                "parameters": {
                    "type": "object",
                    "properties": {
                        p.name: {"type": p.type, "description": p.description} for p in self.parameters
                    },
                    "required": [p.name for p in self.parameters if p.required],
                },
            },
        }

    @classmethod
    def from_wire(cls, data: dict) -> "ToolDefinition":
        try:
            fn = data["function"]
            schema = fn.get("parameters", {})
            required = set(schema.get("required", []))
            params = tuple(
                ToolParam(
                    name=name,
                    type=spec.get("type", "string"),
                    description=spec.get("description", ""),
                    required=name in required,
                )
                for name, spec in schema.get("properties", {}).items()
            )
            return cls(name=fn["name"], description=fn.get("description", ""), parameters=params)
        except (KeyError, TypeError) as exc:
            raise MalformedResponseError(f"malformed tool definition: {exc}") from None


@dataclass(frozen=True)
class TokenUsage:
    prompt_tokens: int | None = None
    completion_tokens: int | None = None
    total_tokens: int | None = None


@dataclass(frozen=True)
class BackendResponse:
    text: str | None = None
    tool_calls: tuple[ToolCall, ...] | None = None
    usage: TokenUsage | None = None
    latency: float = 0.0

    def __post_init__(self):
        if (self.text is None) == (self.tool_calls is None):
            raise ValueError("exactly one of text/tool_calls must be set")

    @property
    def is_text(self) -> bool:
        return self.text is not None
