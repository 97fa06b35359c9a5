"""Interactive stepping over one precomputed computation.

A session runs the engine once and pins a single computation: the first
accepting trace when one exists, otherwise the first maximal computation
found (so rejected and cut-off words can be stepped through too).  A
cursor then moves forward and backward one configuration at a time,
clamped at both ends.

An optional invariant can be checked at every configuration.  In-process
callers pass a callable over configurations; the service attaches an
external oracle process speaking one JSON object per line on stdin/stdout
(`{"state": ..., "tapes": [{"head": ..., "cells": [...]}]}` in,
`{"holds": true|false}` out).  Verdicts are precomputed when the session
is created, so stepping never blocks on the oracle.
"""

from __future__ import annotations

import json
import subprocess
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import engine
from .compgraph import ACCEPT_MESSAGE, REJECT_MESSAGE, cutoff_message
from .engine import DEFAULT_THRESHOLD, Trace
from .machine import Configuration, MachineDef

HOLDS = "holds"
FAILS = "fails"
UNAVAILABLE = "unavailable"

FORWARD = "forward"
BACKWARD = "backward"

IDLE_EXPIRY_SECONDS = 30 * 60

InvariantPredicate = Callable[[Configuration], bool]


class OracleUnavailable(RuntimeError):
    """Raised when the external invariant oracle cannot answer."""


@dataclass
class TapeView:
    head: int
    cells: list[str]

    def to_obj(self) -> dict:
        return {"head": self.head, "cells": list(self.cells)}


@dataclass
class StepView:
    """Everything a client needs to draw one moment of the computation."""

    session_id: str
    step: int
    steps: int
    at_start: bool
    at_end: bool
    prev_state: str | None
    curr_state: str
    last_rule: dict | None
    tapes: list[TapeView]
    invariant: str
    outcome: str
    message: str

    def to_obj(self) -> dict:
        return {
            "id": self.session_id,
            "step": self.step,
            "steps": self.steps,
            "atStart": self.at_start,
            "atEnd": self.at_end,
            "prevState": self.prev_state,
            "currState": self.curr_state,
            "lastRule": self.last_rule,
            "tapes": [t.to_obj() for t in self.tapes],
            "invariant": self.invariant,
            "outcome": self.outcome,
            "message": self.message,
        }


@dataclass
class Session:
    id: str
    machine: MachineDef
    trace: Trace
    outcome: str
    message: str
    verdicts: list[str]
    cursor: int = 0
    touched: float = field(default_factory=time.monotonic)


def _verdict(predicate: InvariantPredicate | None, cfg: Configuration) -> str:
    if predicate is None:
        return UNAVAILABLE
    try:
        return HOLDS if predicate(cfg) else FAILS
    except Exception:
        return UNAVAILABLE


def create_session(
    machine: MachineDef,
    tape0: Sequence[str],
    head0: int,
    threshold: int = DEFAULT_THRESHOLD,
    invariant: InvariantPredicate | None = None,
) -> Session:
    """Run the word and pin the session's computation and verdicts."""

    ex = engine.explore(machine, list(tape0), head0, threshold)
    if ex.accepting_trace is not None:
        trace, outcome, message = ex.accepting_trace, "accept", ACCEPT_MESSAGE
    else:
        trace = ex.first_maximal_trace
        assert trace is not None  # explore always finalizes at least one computation
        if ex.cutoff_count:
            outcome, message = "unknown", cutoff_message(threshold)
        else:
            outcome, message = "reject", REJECT_MESSAGE
    verdicts = [_verdict(invariant, cfg) for cfg in trace.configurations()]
    return Session(
        id=uuid.uuid4().hex,
        machine=machine,
        trace=trace,
        outcome=outcome,
        message=message,
        verdicts=verdicts,
    )


def view(session: Session) -> StepView:
    """The session's current moment."""

    k = session.cursor
    cfgs = session.trace.configurations()
    cfg = cfgs[k]
    last = session.trace.steps[k - 1] if k > 0 else None
    return StepView(
        session_id=session.id,
        step=k,
        steps=len(session.trace.steps),
        at_start=k == 0,
        at_end=k == len(session.trace.steps),
        prev_state=cfgs[k - 1].state if k > 0 else None,
        curr_state=cfg.state,
        last_rule=last.rule.to_obj() if last else None,
        tapes=[TapeView(head=t.head, cells=list(t.cells)) for t in cfg.tapes],
        invariant=session.verdicts[k],
        outcome=session.outcome,
        message=session.message,
    )


def step(session: Session, direction: str) -> StepView:
    """Move the cursor one configuration, clamping at either end; the
    returned view's atStart/atEnd flags tell the caller a move was lost
    to the boundary."""

    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"direction must be {FORWARD!r} or {BACKWARD!r}")
    delta = 1 if direction == FORWARD else -1
    session.cursor = max(0, min(len(session.trace.steps), session.cursor + delta))
    return view(session)


class SubprocessOracle:
    """Invariant oracle backed by a line-oriented child process."""

    def __init__(self, command: list[str]):
        self.command = command
        self._proc: subprocess.Popen | None = None
        self._lock = threading.Lock()

    def _ensure(self) -> subprocess.Popen:
        if self._proc is None or self._proc.poll() is not None:
            try:
                self._proc = subprocess.Popen(
                    self.command,
                    stdin=subprocess.PIPE,
                    stdout=subprocess.PIPE,
                    text=True,
                    bufsize=1,
                )
            except OSError as err:
                raise OracleUnavailable(str(err)) from err
        return self._proc

    def __call__(self, cfg: Configuration) -> bool:
        query = json.dumps(
            {
                "state": cfg.state,
                "tapes": [{"head": t.head, "cells": list(t.cells)} for t in cfg.tapes],
            }
        )
        with self._lock:
            proc = self._ensure()
            try:
                assert proc.stdin is not None and proc.stdout is not None
                proc.stdin.write(query + "\n")
                proc.stdin.flush()
                line = proc.stdout.readline()
            except (OSError, ValueError) as err:
                raise OracleUnavailable(str(err)) from err
        if not line:
            raise OracleUnavailable("oracle process closed its output")
        try:
            answer = json.loads(line)
            return bool(answer["holds"])
        except (json.JSONDecodeError, KeyError, TypeError) as err:
            raise OracleUnavailable(f"malformed oracle answer: {line!r}") from err

    def close(self) -> None:
        with self._lock:
            if self._proc is not None and self._proc.poll() is None:
                self._proc.terminate()
                try:
                    self._proc.wait(timeout=5)
                except subprocess.TimeoutExpired:
                    self._proc.kill()
            self._proc = None


class SessionStore:
    """In-memory session registry with idle expiry."""

    def __init__(self, expiry_seconds: float = IDLE_EXPIRY_SECONDS, clock: Callable[[], float] = time.monotonic):
        self._sessions: dict[str, Session] = {}
        self._expiry = expiry_seconds
        self._clock = clock
        self._lock = threading.Lock()

    def _purge(self) -> None:
        now = self._clock()
        dead = [sid for sid, s in self._sessions.items() if now - s.touched > self._expiry]
        for sid in dead:
            del self._sessions[sid]

    def add(self, session: Session) -> None:
        with self._lock:
            self._purge()
            session.touched = self._clock()
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
            if session is not None:
                session.touched = self._clock()
            return session

    def remove(self, session_id: str) -> bool:
        with self._lock:
            self._purge()
            return self._sessions.pop(session_id, None) is not None

    def __len__(self) -> int:
        with self._lock:
            self._purge()
            return len(self._sessions)
