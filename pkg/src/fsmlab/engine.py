"""Bounded exploration of a machine's computation tree.

Nondeterminism is resolved by exploring every choice: the tree of all
computations from the initial configuration is walked breadth-first, level
by level, taking rules in declaration order within a level.  Identical
configurations reached along different paths are distinct tree nodes; no
visited set is kept, because the artifact reports per-computation facts
(how many computations were cut off, which step of which computation an
edge served as) that a graph search would conflate.

A computation halts when its state is final or no rule applies; one that
reaches the step threshold without halting is cut off.  Halting is checked
first, so a computation whose last allowed step lands in a final state
still counts as halting, not as cut off.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .machine import (
    Configuration,
    MachineDef,
    TransitionRule,
    applicable_rules,
    apply_rule,
    initial_configuration,
)

DEFAULT_THRESHOLD = 1000


@dataclass(frozen=True, slots=True)
class Step:
    """One step of one computation: `index` counts from 1."""

    index: int
    rule: TransitionRule
    before: Configuration
    after: Configuration


@dataclass(frozen=True, slots=True)
class Trace:
    """A single computation: the initial configuration and its steps."""

    initial: Configuration
    steps: tuple[Step, ...]

    def configurations(self) -> tuple[Configuration, ...]:
        return (self.initial,) + tuple(s.after for s in self.steps)

    @property
    def final(self) -> Configuration:
        return self.steps[-1].after if self.steps else self.initial


@dataclass(frozen=True, slots=True)
class EdgeUse:
    """How a rule was used across all computations: as a middle step, as
    the last step of a halting computation, or as the step at which a
    computation was cut off."""

    as_mid: bool = False
    as_last: bool = False
    as_cutoff: bool = False


@dataclass(frozen=True)
class Exploration:
    """Summary of the whole bounded computation tree."""

    machine: MachineDef
    initial: Configuration
    threshold: int
    edges: dict[TransitionRule, EdgeUse]
    terminal_states: frozenset[str]
    cutoff_states: frozenset[str]
    cutoff_count: int
    accepting_trace: Trace | None
    first_maximal_trace: Trace | None


@dataclass(frozen=True, slots=True)
class Accept:
    trace: Trace


@dataclass(frozen=True, slots=True)
class Reject:
    pass


@dataclass(frozen=True, slots=True)
class Unknown:
    cutoff_count: int


Outcome = Accept | Reject | Unknown


class _Node:
    __slots__ = ("cfg", "rule", "parent")

    def __init__(self, cfg: Configuration, rule: TransitionRule | None, parent: "_Node | None"):
        self.cfg = cfg
        self.rule = rule
        self.parent = parent


def _trace_of(node: _Node) -> Trace:
    chain: list[_Node] = []
    cur: _Node | None = node
    while cur is not None:
        chain.append(cur)
        cur = cur.parent
    chain.reverse()
    steps = tuple(
        Step(index=i, rule=n.rule, before=chain[i - 1].cfg, after=n.cfg)
        for i, n in enumerate(chain[1:], start=1)
    )
    return Trace(initial=chain[0].cfg, steps=steps)


def explore(machine: MachineDef, tape0: list[str], head0: int, threshold: int = DEFAULT_THRESHOLD) -> Exploration:
    """Explore every computation of `machine` on `tape0`/`head0` up to
    `threshold` steps.

    Returns the used rules with their usage flags, the states where
    computations halted (terminal) or were cut off, the number of cut-off
    computations, the first accepting trace in breadth-first order (which
    is therefore a shortest one), and the first maximal computation of any
    kind (used as the default stepping trace when nothing accepts).
    """

    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    root = initial_configuration(machine, tape0, head0)

    flags: dict[TransitionRule, list[bool]] = {}  # [mid, last, cutoff]
    terminal: dict[str, None] = {}
    cutoff: dict[str, None] = {}
    cutoff_count = 0
    accepting: Trace | None = None
    first_maximal: Trace | None = None

    def flag(rule: TransitionRule | None, slot: int) -> None:
        if rule is None:
            return
        use = flags.get(rule)
        if use is None:
            use = flags[rule] = [False, False, False]
        use[slot] = True

    finals = machine.finals
    queue: deque[tuple[_Node, int]] = deque([(_Node(root, None, None), 0)])
    while queue:
        node, depth = queue.popleft()
        cfg = node.cfg
        rules = applicable_rules(machine, cfg) if cfg.state not in finals else []
        if cfg.state in finals or not rules:
            terminal.setdefault(cfg.state, None)
            flag(node.rule, 1)
            if first_maximal is None:
                first_maximal = _trace_of(node)
            if accepting is None and cfg.state == machine.accept:
                accepting = _trace_of(node)
        elif depth == threshold:
            cutoff.setdefault(cfg.state, None)
            cutoff_count += 1
            flag(node.rule, 2)
            if first_maximal is None:
                first_maximal = _trace_of(node)
        else:
            flag(node.rule, 0)
            for rule in rules:
                queue.append((_Node(apply_rule(cfg, rule), rule, node), depth + 1))

    return Exploration(
        machine=machine,
        initial=root,
        threshold=threshold,
        edges={r: EdgeUse(as_mid=f[0], as_last=f[1], as_cutoff=f[2]) for r, f in flags.items()},
        terminal_states=frozenset(terminal),
        cutoff_states=frozenset(cutoff),
        cutoff_count=cutoff_count,
        accepting_trace=accepting,
        first_maximal_trace=first_maximal,
    )


def apply(machine: MachineDef, tape0: list[str], head0: int, threshold: int = DEFAULT_THRESHOLD) -> Outcome:
    """Run the machine on a word: Accept with a shortest accepting trace,
    Reject when every computation halts without accepting, Unknown when
    nothing accepted but some computations were cut off."""

    ex = explore(machine, tape0, head0, threshold)
    if ex.accepting_trace is not None:
        return Accept(ex.accepting_trace)
    if ex.cutoff_count:
        return Unknown(ex.cutoff_count)
    return Reject()


def trace_accepting(machine: MachineDef, tape0: list[str], head0: int, threshold: int = DEFAULT_THRESHOLD) -> Trace | None:
    """The first accepting trace in breadth-first order, or None."""

    return explore(machine, tape0, head0, threshold).accepting_trace


def trace_to_obj(trace: Trace) -> list[dict]:
    """Serialize a trace as a JSON array of configurations; entry 0 has a
    null rule, later entries carry the rule that produced them."""

    out = []
    for i, cfg in enumerate(trace.configurations()):
        out.append(
            {
                "state": cfg.state,
                "heads": [t.head for t in cfg.tapes],
                "tapes": [list(t.cells) for t in cfg.tapes],
                "rule": None if i == 0 else trace.steps[i - 1].rule.to_obj(),
            }
        )
    return out


def format_configuration(cfg: Configuration) -> str:
    """Render a configuration in the classic one-line form
    ``(state (h0 ... hn-1) ((t0 cells) ... (tn-1 cells)))``."""

    heads = " ".join(str(t.head) for t in cfg.tapes)
    tapes = " ".join("(" + " ".join(t.cells) + ")" for t in cfg.tapes)
    return f"({cfg.state} ({heads}) ({tapes}))"


def format_trace(trace: Trace) -> str:
    """Render a trace as one configuration per line, continuation lines
    prefixed with the turnstile."""

    lines = [format_configuration(trace.initial)]
    for step in trace.steps:
        lines.append("⊢ " + format_configuration(step.after))
    return "\n".join(lines)
