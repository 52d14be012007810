"""Session-backed HTTP API driving the step-through visualization UI.

The server renders DOT text, not images; layout happens client-side.
Sessions live in memory and expire after an idle timeout; each session's
cursor mutations are serialized behind a per-session lock.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .dot import dfa_snapshot_to_dot, nfa_partition_to_dot, partition_color
from .machinefile import EPS_TOKEN, MachineFileError, parse_machine_file
from .machines import Dfa, ValidationError, validate_machine
from .stepper import (AtEndError, AtStartError, VizState, finish, init_viz,
                      reset, snapshot, step_backward, step_forward)

DEFAULT_SESSION_TTL = 3600.0

_ACTIONS = {
    "forward": step_forward,
    "backward": step_backward,
    "finish": finish,
    "reset": reset,
}


def snapshot_payload(vs: VizState) -> dict:
    """Wire encoding of the current snapshot plus the conversion tables."""
    snap = snapshot(vs)
    artifacts = vs.artifacts

    def ss_rule_json(r):
        return {"src": list(r.src), "sym": r.sym, "dst": list(r.dst)}

    return {
        "cursor": snap.cursor,
        "total": snap.total,
        "can_forward": snap.can_forward,
        "can_backward": snap.can_backward,
        "nfa_dot": nfa_partition_to_dot(vs.nfa, snap.partition),
        "dfa_dot": dfa_snapshot_to_dot(snap),
        "rule_tables": {
            "processed": [ss_rule_json(r) for r in snap.dfa_edges],
            "unprocessed": [ss_rule_json(r)
                            for r in artifacts.ss_rules[snap.cursor:]],
            "names": [{"members": list(ss), "name": name}
                      for ss, name in artifacts.names.items()],
            "empties": [{"state": q, "closure": list(closure)}
                        for q, closure in artifacts.empties.items()],
        },
        "partition": [
            {
                "src": r.src,
                "label": EPS_TOKEN if r.label is None else r.label,
                "dst": r.dst,
                "color": partition_color(snap.partition, r),
            }
            for r in vs.nfa.rules
        ],
    }


@dataclass
class Session:
    id: str
    viz: VizState
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


class SessionStore:
    """In-memory session map; idle sessions expire after ttl seconds."""

    def __init__(self, ttl: float = DEFAULT_SESSION_TTL):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}

    def _purge(self) -> None:
        now = time.monotonic()
        expired = [sid for sid, sess in self._sessions.items()
                   if now - sess.last_access > self.ttl]
        for sid in expired:
            del self._sessions[sid]

    def create(self, viz: VizState) -> Session:
        sess = Session(id=uuid.uuid4().hex, viz=viz)
        with self._lock:
            self._purge()
            self._sessions[sess.id] = sess
        return sess

    def get(self, sid: str) -> Session | None:
        with self._lock:
            self._purge()
            sess = self._sessions.get(sid)
            if sess is not None:
                sess.last_access = time.monotonic()
            return sess

    def delete(self, sid: str) -> bool:
        with self._lock:
            self._purge()
            return self._sessions.pop(sid, None) is not None


class StepRequest(BaseModel):
    action: str


def create_app(static_dir: str | None = None,
               session_ttl: float = DEFAULT_SESSION_TTL) -> FastAPI:
    app = FastAPI(title="subsetviz")
    store = SessionStore(ttl=session_ttl)
    app.state.sessions = store

    def require(sid: str) -> Session:
        sess = store.get(sid)
        if sess is None:
            raise HTTPException(404, detail={"code": "unknown-session"})
        return sess

    @app.post("/api/sessions", status_code=201)
    async def create_session(request: Request):
        text = (await request.body()).decode("utf-8", errors="replace")
        try:
            machine = validate_machine(parse_machine_file(text))
        except MachineFileError as exc:
            raise HTTPException(400, detail={"errors": [
                {"line": e.line, "col": e.col, "message": e.message}
                for e in exc.errors]})
        except ValidationError as exc:
            raise HTTPException(400, detail={"errors": [
                {"line": None, "col": None, "message": message}
                for message in exc.errors]})
        if isinstance(machine, Dfa):
            raise HTTPException(400, detail={"errors": [
                {"line": None, "col": None,
                 "message": "machine is already deterministic"}]})
        sess = store.create(init_viz(machine))
        return {"id": sess.id, "payload": snapshot_payload(sess.viz)}

    @app.get("/api/sessions/{sid}")
    def get_session(sid: str):
        sess = require(sid)
        with sess.lock:
            return {"id": sess.id, "payload": snapshot_payload(sess.viz)}

    @app.post("/api/sessions/{sid}/step")
    def step_session(sid: str, req: StepRequest):
        action = _ACTIONS.get(req.action)
        if action is None:
            raise HTTPException(400, detail={"errors": [
                {"line": None, "col": None,
                 "message": f"unknown action {req.action!r}"}]})
        sess = require(sid)
        with sess.lock:
            try:
                sess.viz = action(sess.viz)
            except AtStartError:
                raise HTTPException(409, detail={"code": "at-start"})
            except AtEndError:
                raise HTTPException(409, detail={"code": "at-end"})
            return {"id": sess.id, "payload": snapshot_payload(sess.viz)}

    @app.delete("/api/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        if not store.delete(sid):
            raise HTTPException(404, detail={"code": "unknown-session"})

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
