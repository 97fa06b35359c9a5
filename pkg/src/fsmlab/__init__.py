"""Nondeterministic multitape Turing machines: engine, diagrams,
computation graphs, and interactive stepping sessions."""

from .compgraph import CmpGraph, EdgeClass, build_cmpgraph, classify_edge, render_cmpgraph
from .diagram import SubsetViolation, render_subdiagram, render_transition_diagram
from .engine import (
    DEFAULT_THRESHOLD,
    Accept,
    EdgeUse,
    Exploration,
    Outcome,
    Reject,
    Step,
    Trace,
    Unknown,
    apply,
    explore,
    format_configuration,
    format_trace,
    trace_accepting,
    trace_to_obj,
)
from .machine import (
    BLANK,
    LEFT_END,
    Configuration,
    Diagnostic,
    DiagnosticCode,
    HeadAction,
    InvalidInitial,
    LeftEdgeViolation,
    MachineDef,
    MachineValidationError,
    Tape,
    TransitionRule,
    applicable_rules,
    apply_rule,
    initial_configuration,
    parse_machine,
    read_symbols,
    validate_machine,
)
from .session import (
    SessionStore,
    StepView,
    SubprocessOracle,
    create_session,
    step,
    view,
)

__all__ = [
    "Accept",
    "BLANK",
    "CmpGraph",
    "Configuration",
    "DEFAULT_THRESHOLD",
    "Diagnostic",
    "DiagnosticCode",
    "EdgeClass",
    "EdgeUse",
    "Exploration",
    "HeadAction",
    "InvalidInitial",
    "LEFT_END",
    "LeftEdgeViolation",
    "MachineDef",
    "MachineValidationError",
    "Outcome",
    "Reject",
    "SessionStore",
    "Step",
    "StepView",
    "SubprocessOracle",
    "SubsetViolation",
    "Tape",
    "Trace",
    "TransitionRule",
    "Unknown",
    "applicable_rules",
    "apply",
    "apply_rule",
    "build_cmpgraph",
    "classify_edge",
    "create_session",
    "explore",
    "format_configuration",
    "format_trace",
    "initial_configuration",
    "parse_machine",
    "read_symbols",
    "render_cmpgraph",
    "render_subdiagram",
    "render_transition_diagram",
    "step",
    "trace_accepting",
    "trace_to_obj",
    "validate_machine",
    "view",
]
