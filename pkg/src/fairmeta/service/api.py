"""HTTP API: one endpoint per curator action, JSON in and out.

Every error body carries a stable machine code next to the human message;
repair-loop failures include the validator findings so the UI can render
them.
"""

from __future__ import annotations

import io
import json
import zipfile
from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .. import fixtures
from ..llm import BackendError
from ..namespaces import ODRL
from ..odrl import UsageContext, evaluate
from ..pipeline import PipelineSession, RepairExhaustedError, TaskOrderError
from ..rdf import Iri, TurtleSyntaxError, parse_turtle
from ..shacl import parse_shapes, validate
from .config import ServiceConfig
from .manager import SessionManager, SessionNotFoundError


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, findings: list[str] | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.findings = findings or []
        super().__init__(message)

    def body(self) -> dict:
        payload = {"code": self.code, "message": self.message}
        if self.findings:
            payload["findings"] = self.findings
        return payload


class InstructionBody(BaseModel):
    instruction: str = ""


class CreateSessionBody(BaseModel):
    base_shapes: str | None = None


class ValidateBody(BaseModel):
    data: str
    shapes: str


class PolicyEvalBody(BaseModel):
    country: str
    timestamp: str
    action: str = "use"


def _session_view(session: PipelineSession) -> dict:
    artifacts = session.export()
    return {
        "id": session.id,
        "created_at": session.created_at,
        "model_id": session.config.model_id,
        "tasks_done": sorted(session.transcripts.keys()),
        "artifacts": artifacts.to_dict(),
        "repair_logs": session.repair_logs,
        "shape_delta": session.last_delta.to_dict() if session.last_delta is not None else None,
        "observed_pids": sorted(session.observed_pids),
        "transcripts": {task: conv.to_wire() for task, conv in session.transcripts.items()},
    }


def _action_iri(action: str) -> Iri:
    if ":" in action and Iri(action).is_absolute():
        return Iri(action)
    return ODRL.term(action)


def create_app(config: ServiceConfig, manager: SessionManager | None = None) -> FastAPI:
    app = FastAPI(title="fairmeta service", version="0.1.0")
    mgr = manager or SessionManager(config)
    app.state.config = config
    app.state.manager = mgr

    # the browser client may be opened from another local origin during development
    from fastapi.middleware.cors import CORSMiddleware

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.body())

    def fetch(session_id: str) -> PipelineSession:
        try:
            return mgr.get(session_id)
        except SessionNotFoundError:
            raise ApiError(404, "session_not_found", f"no session with id {session_id!r}")

    def run_task(session_id: str, task, *args) -> dict:
        session = fetch(session_id)
        with mgr.lock(session_id):
            try:
                task(session, *args)
            except TaskOrderError as exc:
                raise ApiError(409, "task_order_violation", str(exc))
            except ValueError as exc:
                raise ApiError(400, "bad_request", str(exc))
            except RepairExhaustedError as exc:
                mgr.persist(session)
                raise ApiError(
                    422,
                    "repair_exhausted",
                    "the model output still fails validation after the retry budget",
                    findings=exc.findings,
                )
            except BackendError as exc:
                raise ApiError(502, "backend_unavailable", str(exc))
            mgr.persist(session)
            return _session_view(session)

    @app.get("/config")
    def get_config():
        return config.public_view()

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        turtle = body.base_shapes or fixtures.read(fixtures.BASE_SHAPES)
        try:
            session = mgr.create(turtle)
        except TurtleSyntaxError as exc:
            raise ApiError(422, "invalid_turtle", f"base shapes do not parse: {exc}")
        return _session_view(session)

    @app.get("/sessions")
    def list_sessions():
        return {"sessions": mgr.list_ids()}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return _session_view(fetch(session_id))

    @app.post("/sessions/{session_id}/schema/extend")
    def extend_schema(session_id: str, body: InstructionBody):
        return run_task(session_id, PipelineSession.extend_schema, body.instruction)

    @app.post("/sessions/{session_id}/schema/correct")
    def correct_schema(session_id: str, body: InstructionBody):
        return run_task(session_id, PipelineSession.correct_schema, body.instruction)

    @app.post("/sessions/{session_id}/instance")
    def create_instance(session_id: str, body: InstructionBody):
        return run_task(session_id, PipelineSession.create_instance, body.instruction)

    @app.post("/sessions/{session_id}/policy")
    def create_policy(session_id: str, body: InstructionBody):
        return run_task(session_id, PipelineSession.create_policy, body.instruction)

    @app.post("/sessions/{session_id}/explain")
    def explain(session_id: str, body: InstructionBody | None = None):
        return run_task(session_id, lambda session: PipelineSession.explain(session))

    @app.post("/sessions/{session_id}/policy/eval")
    def policy_eval(session_id: str, body: PolicyEvalBody):
        session = fetch(session_id)
        if session.policy is None:
            raise ApiError(409, "task_order_violation", "this session has no policy yet")
        try:
            ctx = UsageContext.of(body.country, body.timestamp, _action_iri(body.action))
        except ValueError as exc:
            raise ApiError(400, "bad_request", str(exc))
        decision = evaluate(session.policy, ctx)
        return {"outcome": decision.outcome.value, "reasons": list(decision.reasons)}

    @app.post("/validate")
    def validate_stateless(body: ValidateBody):
        try:
            shapes = parse_shapes(parse_turtle(body.shapes))
        except Exception as exc:
            raise ApiError(422, "invalid_shapes", f"shapes do not parse: {exc}")
        try:
            data = parse_turtle(body.data)
        except TurtleSyntaxError as exc:
            raise ApiError(422, "invalid_turtle", f"data does not parse: {exc}")
        report = validate(data, shapes)
        return {
            "conforms": report.conforms,
            "violations": [
                {
                    "focus_node": str(v.focus_node),
                    "path": v.path.value,
                    "constraint": v.constraint.value,
                    "message": v.message,
                }
                for v in report.violations
            ],
        }

    if config.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    @app.get("/sessions/{session_id}/export")
    def export_zip(session_id: str):
        session = fetch(session_id)
        artifacts = session.export()
        buffer = io.BytesIO()
        with zipfile.ZipFile(buffer, "w", zipfile.ZIP_DEFLATED) as bundle:
            names = {
                "shapes.ttl": artifacts.shapes_turtle,
                "instance.ttl": artifacts.instance_turtle,
                "policy.ttl": artifacts.policy_turtle,
                "explanation.txt": artifacts.explanation_text,
                "diagram.puml": artifacts.diagram_text,
            }
            for name, content in names.items():
                if content is not None:
                    bundle.writestr(name, content)
            bundle.writestr(
                "provenance.json",
                json.dumps(artifacts.provenance, indent=2, sort_keys=True, ensure_ascii=False),
            )
        return Response(
            content=buffer.getvalue(),
            media_type="application/zip",
            headers={"Content-Disposition": f'attachment; filename="session-{session_id}.zip"'},
        )

    return app
