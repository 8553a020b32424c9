"""Local HTTP service exposing pipeline sessions."""

from .api import ApiError, create_app
from .config import ConfigError, ServiceConfig, default_fixture_config, load_config
from .manager import SessionManager, SessionNotFoundError

__all__ = [
    "ApiError",
    "ConfigError",
    "ServiceConfig",
    "SessionManager",
    "SessionNotFoundError",
    "create_app",
    "default_fixture_config",
    "load_config",
]
