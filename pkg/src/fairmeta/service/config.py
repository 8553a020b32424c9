"""Service configuration: defaults < config file < environment < flags.

Secrets (the backend API key) come only from the environment or a key
file, never from command-line flags.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from ..pid import GND_DEFAULT_ENDPOINT

ENV_PREFIX = "FAIRMETA_"

_ENV_KEYS = {
    "mode": "MODE",
    "backend_url": "BACKEND_URL",
    "model_id": "MODEL_ID",
    "api_key": "API_KEY",
    "api_key_file": "API_KEY_FILE",
    "sparql_endpoint": "SPARQL_ENDPOINT",
    "fixtures_dir": "FIXTURES_DIR",
    "script": "SCRIPT",
    "sessions_dir": "SESSIONS_DIR",
    "max_retries": "MAX_RETRIES",
    "host": "HOST",
    "port": "PORT",
    "ui_dir": "UI_DIR",
}


class ConfigError(ValueError):
    pass


@dataclass
class ServiceConfig:
    mode: str = "fixture"  # "fixture" (offline, scripted) or "live"
    host: str = "127.0.0.1"
    port: int = 8760
    sessions_dir: str = "./sessions"
    backend_url: str | None = None
    model_id: str = "scripted-replay"
    api_key: str | None = None
    sparql_endpoint: str = GND_DEFAULT_ENDPOINT
    fixtures_dir: str | None = None  # SPARQL fixture directory (fixture mode)
    script: str | None = None  # backend script path (fixture mode)
    max_retries: int = 2
    ui_dir: str | None = None  # built browser client to serve at /ui

    def validate(self) -> "ServiceConfig":
        if self.mode not in ("fixture", "live"):
            raise ConfigError(f"mode must be 'fixture' or 'live', got {self.mode!r}")
        if self.mode == "fixture":
            if not self.fixtures_dir:
                raise ConfigError("fixture mode requires a SPARQL fixtures directory (fixtures_dir)")
            if not self.script:
                raise ConfigError("fixture mode requires a backend script path (script)")
        if self.mode == "live" and not self.backend_url:
            raise ConfigError("live mode requires a backend base URL (backend_url)")
        return self

    def public_view(self) -> dict:
        """What GET /config exposes: mode and endpoints, never secrets."""
        return {
            "mode": self.mode,
            "model_id": self.model_id,
            "backend_url": self.backend_url if self.mode == "live" else None,
            "sparql_endpoint": self.sparql_endpoint,
            "prompts_leave_machine": self.mode == "live",
            "max_retries": self.max_retries,
        }


def _apply(config: ServiceConfig, values: dict):
    for key, value in values.items():
        if value is None:
            continue
        if key in ("port", "max_retries"):
            value = int(value)
        if key == "api_key_file":
            config.api_key = Path(value).read_text(encoding="utf-8").strip()
            continue
        if hasattr(config, key):
            setattr(config, key, value)
        else:
            raise ConfigError(f"unknown configuration key {key!r}")


def load_config(
    config_file: str | Path | None = None,
    env: dict | None = None,
    overrides: dict | None = None,
) -> ServiceConfig:
    config = ServiceConfig()
    if config_file is not None:
        with open(config_file, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config file is not valid JSON: {exc}") from None
        _apply(config, data)
    env = os.environ if env is None else env
    env_values = {}
    for key, suffix in _ENV_KEYS.items():
        raw = env.get(ENV_PREFIX + suffix)
        if raw is not None:
            env_values[key] = raw
    _apply(config, env_values)
    if overrides:
        _apply(config, {k: v for k, v in overrides.items() if v is not None})
    return config.validate()


def default_fixture_config(sessions_dir: str | Path) -> ServiceConfig:
    """Fixture-mode config wired to the packaged demo fixtures."""
    from .. import fixtures

    return ServiceConfig(
        mode="fixture",
        sessions_dir=str(sessions_dir),
        fixtures_dir=str(fixtures.SPARQL_DIR),
        script=str(fixtures.SCRIPTS_DIR / "demo_scenario.json"),
    ).validate()
