"""The generate -> parse -> validate -> correct loop.

Every model generation passes through here: the answer's code block is
parsed as Turtle, the task's validators run over the graph, and any
findings go back to the model verbatim as a correction turn. Findings are
machine-checked facts, never paraphrased.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..llm import (
    Backend,
    Conversation,
    ToolDefinition,
    ToolExecutor,
    assistant,
    complete,
    run_tool_loop,
    user,
)
from ..rdf import Graph, TurtleSyntaxError, parse_turtle
from .extract import extract_code_block
from .prompts import correction_prompt

#: a validator inspects the parsed artifact and returns finding strings
Validator = Callable[[Graph], list[str]]


@dataclass(frozen=True)
class RepairRound:
    findings: tuple[str, ...]
    correction_prompt: str

    def to_dict(self) -> dict:
        return {"findings": list(self.findings), "correction_prompt": self.correction_prompt}


@dataclass(frozen=True)
class RepairOutcome:
    artifact: Graph
    attempts: int
    repair_log: tuple[RepairRound, ...]
    transcript: Conversation
    text: str  # the accepted model answer, verbatim


class RepairExhaustedError(Exception):
    def __init__(self, findings: list[str], repair_log: tuple[RepairRound, ...], transcript: Conversation):
        self.findings = list(findings)
        self.repair_log = repair_log
        self.transcript = transcript
        summary = "; ".join(findings[:3])
        more = f" (+{len(findings) - 3} more)" if len(findings) > 3 else ""
        super().__init__(
            f"validation still failing after {len(repair_log) + 1} attempt(s): {summary}{more}"
        )


def generate_validated(
    conv: Conversation,
    validators: Sequence[Validator],
    backend: Backend,
    max_retries: int = 2,
    tools: Sequence[ToolDefinition] = (),
    executor: ToolExecutor | None = None,
    max_tool_turns: int = 8,
) -> RepairOutcome:
    """Run the backend until the artifact passes all validators.

    max_retries counts correction turns, so attempts <= max_retries + 1.
    Raises RepairExhaustedError with the final findings and the full log.
    """
    if max_retries < 0:
        raise ValueError("max_retries must be non-negative")
    transcript = conv
    repair_log: list[RepairRound] = []
    findings: list[str] = []
    for attempt in range(1, max_retries + 2):
        if tools:
            assert executor is not None, "tools offered without an executor"
            text, transcript = run_tool_loop(transcript, tools, executor, backend, max_tool_turns)
        else:
            response = complete(transcript, (), backend)
            if not response.is_text:
                raise RuntimeError("backend returned tool calls but no tools were offered")
            text = response.text or ""
            transcript = transcript.add(assistant(text))

        findings = []
        graph: Graph | None = None
        code = extract_code_block(text)
        try:
            graph = parse_turtle(code)
        except TurtleSyntaxError as exc:
            findings.append(f"Turtle syntax error at line {exc.line}, column {exc.column}: {exc.message}")
        if graph is not None:
            for validator in validators:
                findings.extend(validator(graph))
        if not findings:
            assert graph is not None
            return RepairOutcome(
                artifact=graph,
                attempts=attempt,
                repair_log=tuple(repair_log),
                transcript=transcript,
                text=text,
            )
        if attempt == max_retries + 1:
            break
        prompt = correction_prompt(findings)
        repair_log.append(RepairRound(findings=tuple(findings), correction_prompt=prompt))
        transcript = transcript.add(user(prompt))
    raise RepairExhaustedError(findings, tuple(repair_log), transcript)
