"""Backend protocol and the live HTTP chat-completions client."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Protocol, Sequence

import requests

from .messages import (
    BackendResponse,
    Conversation,
    MalformedResponseError,
    TokenUsage,
    ToolCall,
    ToolDefinition,
)


class BackendError(Exception):
    pass


class BackendUnavailableError(BackendError):
    pass


class RateLimitedError(BackendError):
    def __init__(self, message: str, retry_after: float | None = None):
        self.retry_after = retry_after
        super().__init__(message)


class ContextTooLongError(BackendError):
    pass


class Backend(Protocol):
    def complete(self, conv: Conversation, tools: Sequence[ToolDefinition] = ()) -> BackendResponse:
        ...


def complete(conv: Conversation, tools: Sequence[ToolDefinition], backend: Backend) -> BackendResponse:
    """Ask the backend for its next message; the conversation is not mutated."""
    if not conv.messages:
        raise ValueError("conversation must contain at least one message")
    return backend.complete(conv, tools)


@dataclass(frozen=True)
class BackendConfig:
    base_url: str
    model_id: str
    api_key: str | None = None
    temperature: float = 0.0  # pinned for reproducible validation outcomes
    timeout: float = 120.0


class HttpBackend:
    """Chat-completions client for any OpenAI-wire-compatible server."""

    def __init__(self, config: BackendConfig, session: requests.Session | None = None):
        self.config = config
        self.session = session or requests.Session()

    def complete(self, conv: Conversation, tools: Sequence[ToolDefinition] = ()) -> BackendResponse:
        payload = {
            "model": self.config.model_id or conv.model_id,
            "messages": [m.to_wire() for m in conv.messages],
            "temperature": self.config.temperature,
        }
        if tools:
            payload["tools"] = [t.to_wire() for t in tools]
        headers = {"Content-Type": "application/json"}
        if self.config.api_key:
            headers["Authorization"] = f"Bearer {self.config.api_key}"
        url = self.config.base_url.rstrip("/") + "/chat/completions"
        started = time.monotonic()
        try:
            response = self.session.post(url, json=payload, headers=headers, timeout=self.config.timeout)
        except requests.RequestException as exc:
            raise BackendUnavailableError(f"backend request failed: {exc}") from exc
        latency = time.monotonic() - started
        if response.status_code == 429:
            retry_after = response.headers.get("Retry-After")
            raise RateLimitedError(
                "backend rate limited the request",
                retry_after=float(retry_after) if retry_after else None,
            )
        if response.status_code >= 400:
            body = response.text[:500]
            if "context_length" in body or "maximum context" in body:
                raise ContextTooLongError(f"conversation exceeds the model context window: {body}")
            raise BackendUnavailableError(f"backend returned HTTP {response.status_code}: {body}")
        try:
            data = response.json()
        except ValueError as exc:
            raise MalformedResponseError(f"backend response is not JSON: {exc}") from None
        return _parse_completion(data, latency)


def _parse_completion(data: dict, latency: float) -> BackendResponse:
    try:
        message = data["choices"][0]["message"]
    except (KeyError, IndexError, TypeError) as exc:
        raise MalformedResponseError(f"unexpected completion payload: {exc}") from None
    usage = None
    if isinstance(data.get("usage"), dict):
        u = data["usage"]
        usage = TokenUsage(
            prompt_tokens=u.get("prompt_tokens"),
            completion_tokens=u.get("completion_tokens"),
            total_tokens=u.get("total_tokens"),
        )
    raw_calls = message.get("tool_calls")
    if raw_calls:
        calls = tuple(ToolCall.from_wire(tc) for tc in raw_calls)
        return BackendResponse(tool_calls=calls, usage=usage, latency=latency)
    content = message.get("content")
    if content is None:
        raise MalformedResponseError("completion message has neither content nor tool calls")
    return BackendResponse(text=content, usage=usage, latency=latency)
