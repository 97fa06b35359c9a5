"""Transition diagrams as Graphviz DOT text.

The DOT text is the artifact; layout and rasterization belong to whatever
consumes it.  Output is deterministic: nodes appear in declaration order,
edges in the order their first rule was declared, and rules sharing an
endpoint pair are stacked into one edge label.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable

from .machine import MachineDef, TransitionRule


class SubsetViolation(ValueError):
    """Raised when a subdiagram selection reaches outside itself or the
    machine it came from."""


def rule_entry(rule: TransitionRule) -> str:
    """One label entry: the read list and the action list of a rule."""
    reads = " ".join(rule.read)
    actions = " ".join(a.to_token() for a in rule.actions)
    return f"[({reads}) ({actions})]"


def edge_label(rules: list[TransitionRule]) -> str:
    """Stack the entries of all rules sharing one (from, to) pair; three or
    more entries break onto separate lines."""
    entries = [rule_entry(r) for r in rules]
    sep = ",\\n" if len(entries) >= 3 else ", "
    return sep.join(entries)


def dot_ids(machine: MachineDef) -> dict[str, str]:
    """Map each state to a DOT-safe node id (alphanumerics and underscores,
    collisions disambiguated with a numeric suffix)."""
    ids: dict[str, str] = {}
    used: set[str] = set()
    for state in machine.states:
        base = re.sub(r"[^A-Za-z0-9_]", "_", state) or "_"
        candidate, n = base, 1
        while candidate in used:
            n += 1
            candidate = f"{base}_{n}"
        used.add(candidate)
        ids[state] = candidate
    return ids


def node_line(machine: MachineDef, state: str, node_id: str, *, green: bool, gold: bool = False, crimson: bool = False) -> str:
    """Render one node statement carrying the state's shape and highlights."""
    if state == machine.accept:
        shape = "doubleoctagon"
    elif state in machine.finals:
        shape = "doublecircle"
    else:
        shape = "circle"
    attrs = [f"shape={shape}"]
    if gold:
        attrs.append("style=filled")
        attrs.append("fillcolor=gold")
    elif green:
        attrs.append("style=filled")
        attrs.append("fillcolor=green")
    if crimson:
        attrs.append("color=crimson")
    if node_id != state:
        attrs.append(f'label="{dot_escape(state)}"')
    return f'  "{node_id}" [{", ".join(attrs)}];'


def dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def grouped_edges(rules: Iterable[TransitionRule]) -> dict[tuple[str, str], list[TransitionRule]]:
    """Group rules by endpoint pair, both pairs and members in given order."""
    groups: dict[tuple[str, str], list[TransitionRule]] = {}
    for rule in rules:
        groups.setdefault((rule.from_state, rule.to_state), []).append(rule)
    return groups


def edge_lines(ids: dict[str, str], rules: Iterable[TransitionRule]) -> list[str]:
    out = []
    for (frm, to), group in grouped_edges(rules).items():
        out.append(f'  "{ids[frm]}" -> "{ids[to]}" [label="{_escape_label(edge_label(group))}"];')
    return out


def _escape_label(label: str) -> str:
    # label text is already DOT-escaped for line breaks; quote-escape only
    return label.replace('"', '\\"')


RuleSelection = Iterable[TransitionRule] | Callable[[TransitionRule], bool]


def render_subdiagram(
    machine: MachineDef,
    keep_states: Iterable[str],
    keep_rules: RuleSelection,
    highlight_start: str | None = None,
) -> str:
    """Render the sub-diagram induced by `keep_states` and `keep_rules`.

    `keep_rules` is a predicate over rules or an iterable of rules of the
    machine.  Every kept rule must connect kept states and `highlight_start`
    (drawn green, the way the start state is in a full diagram) must be a
    kept state; anything else raises SubsetViolation.
    """

    kept_states = list(dict.fromkeys(keep_states))
    state_set = set(kept_states)
    unknown = [s for s in kept_states if s not in machine.states]
    if unknown:
        raise SubsetViolation(f"states {unknown!r} are not states of {machine.name!r}")

    if callable(keep_rules):
        kept_rules = [r for r in machine.rules if keep_rules(r)]
    else:
        wanted = list(keep_rules)
        for r in wanted:
            if r not in machine.rules:
                raise SubsetViolation(f"rule {r.to_obj()!r} is not a rule of {machine.name!r}")
        kept_rules = [r for r in machine.rules if r in set(wanted)]
    for r in kept_rules:
        if r.from_state not in state_set or r.to_state not in state_set:
            raise SubsetViolation(
                f"rule {r.from_state!r} -> {r.to_state!r} leaves the kept states"
            )
    if highlight_start is not None and highlight_start not in state_set:
        raise SubsetViolation(f"highlighted start {highlight_start!r} is not a kept state")

    ids = dot_ids(machine)
    ordered = [s for s in machine.states if s in state_set]
    lines = [f'digraph "{dot_escape(machine.name)}" {{', "  rankdir=LR;"]
    for state in ordered:
        lines.append(node_line(machine, state, ids[state], green=state == highlight_start))
    lines.extend(edge_lines(ids, kept_rules))
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_transition_diagram(machine: MachineDef) -> str:
    """Render the full transition diagram, start state highlighted green."""
    return render_subdiagram(machine, machine.states, machine.rules, highlight_start=machine.start)
