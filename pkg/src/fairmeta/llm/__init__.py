"""Backend-agnostic chat-completion client with tool calling."""

from .backend import (
    Backend,
    BackendConfig,
    BackendError,
    BackendUnavailableError,
    ContextTooLongError,
    HttpBackend,
    RateLimitedError,
    complete,
)
from .loop import MaxTurnsExceededError, ToolExecutor, run_tool_loop
from .messages import (
    BackendResponse,
    ChatMessage,
    Conversation,
    MalformedResponseError,
    Role,
    TokenUsage,
    ToolCall,
    ToolDefinition,
    ToolParam,
    assistant,
    system,
    tool_result,
    user,
)
from .scripted import Matcher, ScriptStep, ScriptedBackend, load_script, parse_script, scripted_backend

__all__ = [
    "Backend",
    "BackendConfig",
    "BackendError",
    "BackendResponse",
    "BackendUnavailableError",
    "ChatMessage",
    "ContextTooLongError",
    "Conversation",
    "HttpBackend",
    "MalformedResponseError",
    "Matcher",
    "MaxTurnsExceededError",
    "RateLimitedError",
    "Role",
    "ScriptStep",
    "ScriptedBackend",
    "TokenUsage",
    "ToolCall",
    "ToolDefinition",
    "ToolExecutor",
    "ToolParam",
    "assistant",
    "complete",
    "load_script",
    "parse_script",
    "run_tool_loop",
    "scripted_backend",
    "system",
    "tool_result",
    "user",
]
