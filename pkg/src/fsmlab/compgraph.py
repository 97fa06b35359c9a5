"""Computation graphs: what actually happened on one word.

A computation graph is the subgraph of the transition diagram touched by
the bounded exploration of a word, with two node highlights layered on
top: crimson outlines mark states where some computation halted, gold
fills mark states where some computation was cut off.  When the word is
accepted the graph is trimmed to the single accepting computation, so the
only highlight left is the crimson accept state.

Each used rule also carries an edge class summarizing its role across all
computations: R (an ordinary step), SP (last step of a halting
computation), CO (the step at which a computation was cut off), or COSP
(both kinds of evidence).  Cutoff evidence wins over halting evidence
when only one class must be named.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import engine
from .diagram import dot_escape, dot_ids, edge_lines, node_line
from .engine import Accept, DEFAULT_THRESHOLD, EdgeUse, Outcome
from .machine import MachineDef, TransitionRule

ACCEPT_MESSAGE = "Word accepted."
REJECT_MESSAGE = "Word rejected."


def cutoff_message(threshold: int) -> str:
    return f"No accepting computation found; computations cut off at {threshold} steps."


class EdgeClass(str, Enum):
    R = "r"
    SP = "sp"
    CO = "co"
    COSP = "cosp"


def classify_edge(use: EdgeUse) -> EdgeClass:
    if use.as_cutoff and use.as_last:
        return EdgeClass.COSP
    if use.as_cutoff:
        return EdgeClass.CO
    if use.as_last:
        return EdgeClass.SP
    return EdgeClass.R


@dataclass(frozen=True)
class CmpGraph:
    machine: MachineDef
    tape0: tuple[str, ...]
    head0: int
    threshold: int
    outcome: Outcome
    nodes: tuple[str, ...]
    edges: dict[TransitionRule, EdgeClass]
    crimson: frozenset[str]
    gold: frozenset[str]
    message: str


def build_cmpgraph(machine: MachineDef, tape0: list[str], head0: int, threshold: int = DEFAULT_THRESHOLD) -> CmpGraph:
    """Explore the word and assemble its computation graph."""

    ex = engine.explore(machine, tape0, head0, threshold)
    if ex.accepting_trace is not None:
        trace = ex.accepting_trace
        outcome: Outcome = Accept(trace)
        used = list(dict.fromkeys(step.rule for step in trace.steps))
        last = trace.steps[-1].rule if trace.steps else None
        edges = {r: (EdgeClass.SP if r == last else EdgeClass.R) for r in used}
        touched = {cfg.state for cfg in trace.configurations()}
        crimson: frozenset[str] = frozenset({machine.accept})
        gold: frozenset[str] = frozenset()
        message = ACCEPT_MESSAGE
    else:
        if ex.cutoff_count:
            outcome = engine.Unknown(ex.cutoff_count)
            message = cutoff_message(threshold)
        else:
            outcome = engine.Reject()
            message = REJECT_MESSAGE
        edges = {r: classify_edge(ex.edges[r]) for r in machine.rules if r in ex.edges}
        touched = {ex.initial.state}
        for r in edges:
            touched.add(r.from_state)
            touched.add(r.to_state)
        crimson = ex.terminal_states
        gold = ex.cutoff_states
    nodes = tuple(s for s in machine.states if s in touched)
    return CmpGraph(
        machine=machine,
        tape0=tuple(tape0),
        head0=head0,
        threshold=threshold,
        outcome=outcome,
        nodes=nodes,
        edges=edges,
        crimson=crimson,
        gold=gold,
        message=message,
    )


def render_cmpgraph(graph: CmpGraph) -> str:
    """Render a computation graph as DOT text: the diagram canon plus the
    crimson/gold highlights and the outcome message as a graph label."""

    machine = graph.machine
    ids = dot_ids(machine)
    lines = [f'digraph "{dot_escape(machine.name)}" {{', "  rankdir=LR;"]
    for state in graph.nodes:
        lines.append(
            node_line(
                machine,
                state,
                ids[state],
                green=state == machine.start,
                gold=state in graph.gold,
                crimson=state in graph.crimson,
            )
        )
    ordered_rules = [r for r in machine.rules if r in graph.edges]
    lines.extend(edge_lines(ids, ordered_rules))
    lines.append(f'  label="{dot_escape(graph.message)}";')
    lines.append("  labelloc=b;")
    lines.append("}")
    return "\n".join(lines) + "\n"
