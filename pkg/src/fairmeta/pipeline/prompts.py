"""Prompt templates, loaded from text assets with named placeholders.

Keeping them as files (not code literals) lets prompt wording be iterated
and diff-reviewed without touching code.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

ASSETS_DIR = Path(__file__).resolve().parent / "assets"


@lru_cache(maxsize=None)
def load_template(name: str) -> str:
    path = ASSETS_DIR / f"{name}.txt"
    return path.read_text(encoding="utf-8")


def render(name: str, **values: str) -> str:
    return load_template(name).format(**values).strip()


def persona() -> str:
    return load_template("persona").strip()


def odrl_primer() -> str:
    return load_template("odrl_primer").strip()


def correction_prompt(findings: list[str]) -> str:
    bullets = "\n".join(f"- {finding}" for finding in findings)
    return render("correction", findings=bullets)
