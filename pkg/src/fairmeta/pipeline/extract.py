"""Pull the code payload out of a model answer."""

from __future__ import annotations

import re

_FENCE_RE = re.compile(r"```[a-zA-Z0-9_-]*[ \t]*\r?\n(.*?)(?:```|\Z)", re.DOTALL)


def extract_code_block(llm_text: str) -> str:
    """Content of the first fenced code block, or the whole text trimmed.

    Tolerates a missing closing fence (content runs to the end). Never fails;
    surrounding explanatory prose is simply dropped.
    """
    match = _FENCE_RE.search(llm_text)
    if match:
        return match.group(1).strip()
    return llm_text.strip()
