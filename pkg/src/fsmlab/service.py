"""HTTP/JSON surface over machines and stepping sessions.

All state lives in the in-memory session store; there is no persistence.
Validation failures answer 422 with an array of diagnostic objects, the
same shape the validator produces for machine files.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import session as sessions
from .engine import DEFAULT_THRESHOLD
from .examples import BUNDLED
from .machine import (
    Diagnostic,
    DiagnosticCode,
    InvalidInitial,
    MachineValidationError,
    parse_machine,
)
from .session import SessionStore, SubprocessOracle

SESSION_KEYS = ("machine", "tape0", "head0", "threshold", "invariant")


def _diag_response(diagnostics: list[Diagnostic]) -> JSONResponse:
    return JSONResponse(status_code=422, content=[d.to_obj() for d in diagnostics])


def _bad(code: DiagnosticCode, message: str, locus: str) -> Diagnostic:
    return Diagnostic(code, message, locus)


def create_app(
    store: SessionStore | None = None,
    oracle: SubprocessOracle | None = None,
    frontend_dir: str | Path | None = None,
    default_threshold: int = DEFAULT_THRESHOLD,
) -> FastAPI:
    app = FastAPI(title="fsmlab", docs_url=None, redoc_url=None)
    app.state.store = store if store is not None else SessionStore()
    app.state.oracle = oracle
    app.state.default_threshold = default_threshold

    @app.get("/api/machines/examples")
    def examples() -> list[dict]:
        return [dict(m) for m in BUNDLED]

    @app.post("/api/sessions", status_code=201)
    async def create(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return _diag_response([_bad(DiagnosticCode.BAD_FIELD, "body must be a JSON object", "body")])
        if not isinstance(payload, dict):
            return _diag_response([_bad(DiagnosticCode.BAD_FIELD, "body must be a JSON object", "body")])

        diags: list[Diagnostic] = []
        for key in payload:
            if key not in SESSION_KEYS:
                diags.append(_bad(DiagnosticCode.UNKNOWN_FIELD, f"unknown key {key!r}", str(key)))
        for key in ("machine", "tape0", "head0"):
            if key not in payload:
                diags.append(_bad(DiagnosticCode.BAD_FIELD, f"missing key {key!r}", key))
        if diags:
            return _diag_response(diags)

        try:
            machine = parse_machine(payload["machine"])
        except MachineValidationError as err:
            diags.extend(err.diagnostics)

        tape0 = payload["tape0"]
        if not isinstance(tape0, list) or not all(isinstance(t, str) for t in tape0):
            diags.append(_bad(DiagnosticCode.BAD_INITIAL, "tape0 must be an array of symbols", "tape0"))
        head0 = payload["head0"]
        if not isinstance(head0, int) or isinstance(head0, bool):
            diags.append(_bad(DiagnosticCode.BAD_INITIAL, "head0 must be an integer", "head0"))

        threshold = payload.get("threshold", app.state.default_threshold)
        if threshold is None:
            threshold = app.state.default_threshold
        if not isinstance(threshold, int) or isinstance(threshold, bool) or threshold < 1:
            diags.append(_bad(DiagnosticCode.BAD_FIELD, "threshold must be an integer >= 1", "threshold"))

        invariant = payload.get("invariant")
        if invariant not in (None, "external"):
            diags.append(_bad(DiagnosticCode.BAD_FIELD, 'invariant must be "external" or null', "invariant"))
        if diags:
            return _diag_response(diags)

        predicate = app.state.oracle if invariant == "external" else None
        try:
            session = sessions.create_session(machine, tape0, head0, threshold, predicate)
        except InvalidInitial as err:
            return _diag_response(err.diagnostics)
        app.state.store.add(session)
        return {"id": session.id, "steps": len(session.trace.steps), "outcome": session.outcome}

    @app.get("/api/sessions/{session_id}")
    def get_view(session_id: str):
        session = app.state.store.get(session_id)
        if session is None:
            return JSONResponse(status_code=404, content={"detail": "unknown session"})
        return sessions.view(session).to_obj()

    @app.post("/api/sessions/{session_id}/step")
    async def step(session_id: str, request: Request):
        session = app.state.store.get(session_id)
        if session is None:
            return JSONResponse(status_code=404, content={"detail": "unknown session"})
        try:
            payload = await request.json()
        except Exception:
            payload = None
        direction = payload.get("direction") if isinstance(payload, dict) else None
        if direction not in (sessions.FORWARD, sessions.BACKWARD):
            return _diag_response(
                [_bad(DiagnosticCode.BAD_FIELD, 'direction must be "forward" or "backward"', "direction")]
            )
        return sessions.step(session, direction).to_obj()

    @app.delete("/api/sessions/{session_id}", status_code=204)
    def remove(session_id: str):
        if not app.state.store.remove(session_id):
            return JSONResponse(status_code=404, content={"detail": "unknown session"})
        return Response(status_code=204)

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="frontend")

    return app
