"""Core data model for nondeterministic multitape Turing machines.

A machine reads one symbol per tape each step and, per tape, either moves
that head one cell (L/R) or overwrites the scanned cell.  Tape cell 0 of the
input tape conventionally holds the left-end marker ``@``; every tape uses
``_`` for blank.  Machines are loaded from a JSON object and validated as a
whole: validation collects every problem it can find instead of stopping at
the first one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Sequence

BLANK = "_"
LEFT_END = "@"
MOVE_TOKENS = ("L", "R")
# Tokens that can never be declared in an input alphabet: the two tape
# conventions plus the two move actions (the serialized rule format could
# not tell a Write of "L" apart from a move).
RESERVED_TOKENS = (BLANK, LEFT_END) + MOVE_TOKENS

MACHINE_KEYS = ("name", "tapes", "states", "alphabet", "start", "finals", "accept", "rules")
RULE_KEYS = ("from", "read", "to", "actions")


class DiagnosticCode(str, Enum):
    BAD_START = "BadStart"
    BAD_FINALS = "BadFinals"
    BAD_ACCEPT = "BadAccept"
    BAD_ARITY = "BadArity"
    UNKNOWN_STATE = "UnknownState"
    UNKNOWN_SYMBOL = "UnknownSymbol"
    BAD_TAPE_COUNT = "BadTapeCount"
    WRITE_LEFT_END = "WriteLeftEnd"
    DUPLICATE_STATE = "DuplicateState"
    DUPLICATE_RULE = "DuplicateRule"
    RESERVED_SYMBOL = "ReservedSymbol"
    BAD_FIELD = "BadField"
    UNKNOWN_FIELD = "UnknownField"
    BAD_INITIAL = "BadInitial"


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """One validation finding: a stable code, a human message, and the
    field or rule it points at."""

    code: DiagnosticCode
    message: str
    locus: str

    def __str__(self) -> str:
        return f"{self.code.value} at {self.locus}: {self.message}"

    def to_obj(self) -> dict:
        return {"code": self.code.value, "message": self.message, "locus": self.locus}


class MachineValidationError(ValueError):
    """Raised when a machine object fails validation; carries every
    diagnostic found in the pass."""

    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class LeftEdgeViolation(ValueError):
    """Raised when a rule would move a head left of cell 0."""


class InvalidInitial(ValueError):
    """Raised for a bad starting tape or head position; carries diagnostics."""

    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True, slots=True)
class HeadAction:
    """Per-tape action: kind is "L", "R", or "W" (write `symbol`)."""

    kind: str
    symbol: str | None = None

    @classmethod
    def from_token(cls, token: str) -> "HeadAction":
        if token in MOVE_TOKENS:
            return _MOVES[token]
        return cls("W", token)

    def to_token(self) -> str:
        if self.kind == "W":
            assert self.symbol is not None
            return self.symbol
        return self.kind


_MOVES = {"L": HeadAction("L"), "R": HeadAction("R")}


@dataclass(frozen=True, slots=True)
class TransitionRule:
    """One row of the transition relation: in `from_state`, reading
    `read[i]` on tape i, go to `to_state` performing `actions[i]` on tape i."""

    from_state: str
    read: tuple[str, ...]
    to_state: str
    actions: tuple[HeadAction, ...]

    @classmethod
    def from_obj(cls, obj: Mapping) -> "TransitionRule":
        return cls(
            from_state=obj["from"],
            read=tuple(obj["read"]),
            to_state=obj["to"],
            actions=tuple(HeadAction.from_token(t) for t in obj["actions"]),
        )

    def to_obj(self) -> dict:
        return {
            "from": self.from_state,
            "read": list(self.read),
            "to": self.to_state,
            "actions": [a.to_token() for a in self.actions],
        }


@dataclass(frozen=True, slots=True)
class Tape:
    """An unbounded-to-the-right tape: the explicit cells plus a head
    position, with 0 <= head < len(cells) always."""

    cells: tuple[str, ...]
    head: int

    def scanned(self) -> str:
        return self.cells[self.head]


@dataclass(frozen=True, slots=True)
class Configuration:
    """A machine snapshot: the control state and all tapes."""

    state: str
    tapes: tuple[Tape, ...]


@dataclass(frozen=True)
class MachineDef:
    """A validated machine definition.  `states`, `alphabet`, and `rules`
    keep their declared order; that order is observable in diagrams and in
    the exploration of nondeterministic choices."""

    name: str
    tapes: int
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    start: str
    finals: frozenset[str]
    accept: str
    rules: tuple[TransitionRule, ...]

    @cached_property
    def rules_from(self) -> dict[str, tuple[TransitionRule, ...]]:
        by_state: dict[str, list[TransitionRule]] = {s: [] for s in self.states}
        for rule in self.rules:
            by_state[rule.from_state].append(rule)
        return {s: tuple(rs) for s, rs in by_state.items()}

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "tapes": self.tapes,
            "states": list(self.states),
            "alphabet": list(self.alphabet),
            "start": self.start,
            "finals": sorted(self.finals, key=self.states.index),
            "accept": self.accept,
            "rules": [r.to_obj() for r in self.rules],
        }


def validate_machine(obj: object) -> list[Diagnostic]:
    """Validate a machine JSON object, returning every diagnostic found
    (empty list means valid)."""

    try:
        parse_machine(obj)
    except MachineValidationError as err:
        return err.diagnostics
    return []


def parse_machine(obj: object) -> MachineDef:
    """Parse and validate a machine JSON object into a MachineDef.

    Raises MachineValidationError carrying the full diagnostic list if
    anything is wrong; on success every structural invariant of MachineDef
    holds.
    """

    diags: list[Diagnostic] = []

    def bad(code: DiagnosticCode, message: str, locus: str) -> None:
        diags.append(Diagnostic(code, message, locus))

    if not isinstance(obj, Mapping):
        raise MachineValidationError(
            [Diagnostic(DiagnosticCode.BAD_FIELD, "machine must be a JSON object", "machine")]
        )

    for key in obj:
        if key not in MACHINE_KEYS:
            bad(DiagnosticCode.UNKNOWN_FIELD, f"unknown key {key!r}", str(key))
    for key in MACHINE_KEYS:
        if key not in obj:
            bad(DiagnosticCode.BAD_FIELD, f"missing key {key!r}", key)
    if diags and any(k not in obj for k in MACHINE_KEYS):
        raise MachineValidationError(diags)

    name = obj["name"]
    if not isinstance(name, str) or not name:
        bad(DiagnosticCode.BAD_FIELD, "name must be a non-empty string", "name")
        name = "machine"

    tapes = obj["tapes"]
    if not isinstance(tapes, int) or isinstance(tapes, bool) or tapes < 1:
        bad(DiagnosticCode.BAD_TAPE_COUNT, "tapes must be an integer >= 1", "tapes")
        tapes = 0  # disables arity checks below

    states_raw = obj["states"]
    states: list[str] = []
    if not isinstance(states_raw, list) or not states_raw:
        bad(DiagnosticCode.BAD_FIELD, "states must be a non-empty array", "states")
    else:
        seen: set[str] = set()
        for i, s in enumerate(states_raw):
            if not isinstance(s, str) or not s or any(ch.isspace() for ch in s):
                bad(DiagnosticCode.BAD_FIELD, f"state {s!r} must be a non-blank string", f"states[{i}]")
                continue
            if s in seen:
                bad(DiagnosticCode.DUPLICATE_STATE, f"state {s!r} declared twice", f"states[{i}]")
                continue
            seen.add(s)
            states.append(s)
    state_set = set(states)

    alpha_raw = obj["alphabet"]
    alphabet: list[str] = []
    if not isinstance(alpha_raw, list):
        bad(DiagnosticCode.BAD_FIELD, "alphabet must be an array", "alphabet")
    else:
        for i, sym in enumerate(alpha_raw):
            locus = f"alphabet[{i}]"
            if not isinstance(sym, str) or not sym or any(ch.isspace() for ch in sym):
                bad(DiagnosticCode.BAD_FIELD, f"symbol {sym!r} must be a non-blank string", locus)
                continue
            if sym in RESERVED_TOKENS:
                bad(DiagnosticCode.RESERVED_SYMBOL, f"{sym!r} is reserved and cannot be an alphabet symbol", locus)
                continue
            if sym in alphabet:
                bad(DiagnosticCode.BAD_FIELD, f"symbol {sym!r} declared twice", locus)
                continue
            alphabet.append(sym)
    readable = set(alphabet) | {BLANK, LEFT_END}
    writable = set(alphabet) | {BLANK}

    start = obj["start"]
    if not isinstance(start, str) or start not in state_set:
        bad(DiagnosticCode.BAD_START, f"start state {start!r} is not a declared state", "start")

    finals_raw = obj["finals"]
    finals: list[str] = []
    if not isinstance(finals_raw, list):
        bad(DiagnosticCode.BAD_FINALS, "finals must be an array of states", "finals")
    else:
        for i, s in enumerate(finals_raw):
            if not isinstance(s, str) or s not in state_set:
                bad(DiagnosticCode.BAD_FINALS, f"final state {s!r} is not a declared state", f"finals[{i}]")
            elif s in finals:
                bad(DiagnosticCode.BAD_FINALS, f"final state {s!r} listed twice", f"finals[{i}]")
            else:
                finals.append(s)

    accept = obj["accept"]
    if not isinstance(accept, str) or accept not in finals:
        bad(DiagnosticCode.BAD_ACCEPT, f"accept state {accept!r} is not one of the finals", "accept")

    rules_raw = obj["rules"]
    rules: list[TransitionRule] = []
    if not isinstance(rules_raw, list):
        bad(DiagnosticCode.BAD_FIELD, "rules must be an array", "rules")
        rules_raw = []
    seen_rules: set[tuple] = set()
    for i, robj in enumerate(rules_raw):
        locus = f"rules[{i}]"
        if not isinstance(robj, Mapping):
            bad(DiagnosticCode.BAD_FIELD, "rule must be a JSON object", locus)
            continue
        ok = True
        for key in robj:
            if key not in RULE_KEYS:
                bad(DiagnosticCode.UNKNOWN_FIELD, f"unknown key {key!r}", locus)
                ok = False
        for key in RULE_KEYS:
            if key not in robj:
                bad(DiagnosticCode.BAD_FIELD, f"missing key {key!r}", locus)
                ok = False
        if not ok:
            continue
        frm, read, to, actions = robj["from"], robj["read"], robj["to"], robj["actions"]
        if not isinstance(frm, str) or frm not in state_set:
            bad(DiagnosticCode.UNKNOWN_STATE, f"state {frm!r} is not declared", f"{locus}.from")
            ok = False
        if not isinstance(to, str) or to not in state_set:
            bad(DiagnosticCode.UNKNOWN_STATE, f"state {to!r} is not declared", f"{locus}.to")
            ok = False
        if not isinstance(read, list) or not all(isinstance(t, str) for t in read):
            bad(DiagnosticCode.BAD_FIELD, "read must be an array of symbols", f"{locus}.read")
            ok = False
        elif tapes and len(read) != tapes:
            bad(DiagnosticCode.BAD_ARITY, f"read lists {len(read)} symbols for {tapes} tapes", f"{locus}.read")
            ok = False
        else:
            for j, sym in enumerate(read):
                if sym not in readable:
                    bad(DiagnosticCode.UNKNOWN_SYMBOL, f"read symbol {sym!r} is not in the alphabet", f"{locus}.read[{j}]")
                    ok = False
        if not isinstance(actions, list) or not all(isinstance(t, str) for t in actions):
            bad(DiagnosticCode.BAD_FIELD, "actions must be an array of tokens", f"{locus}.actions")
            ok = False
        elif tapes and len(actions) != tapes:
            bad(DiagnosticCode.BAD_ARITY, f"actions lists {len(actions)} tokens for {tapes} tapes", f"{locus}.actions")
            ok = False
        else:
            for j, tok in enumerate(actions):
                if tok in MOVE_TOKENS:
                    continue
                if tok == LEFT_END:
                    bad(DiagnosticCode.WRITE_LEFT_END, "the left-end marker cannot be written", f"{locus}.actions[{j}]")
                    ok = False
                elif tok not in writable:
                    bad(DiagnosticCode.UNKNOWN_SYMBOL, f"write symbol {tok!r} is not in the alphabet", f"{locus}.actions[{j}]")
                    ok = False
        if not ok:
            continue
        key4 = (frm, tuple(read), to, tuple(actions))
        if key4 in seen_rules:
            bad(DiagnosticCode.DUPLICATE_RULE, "rule duplicates an earlier rule", locus)
            continue
        seen_rules.add(key4)
        rules.append(TransitionRule.from_obj(robj))

    if diags:
        raise MachineValidationError(diags)
    return MachineDef(
        name=name,
        tapes=tapes,
        states=tuple(states),
        alphabet=tuple(alphabet),
        start=start,
        finals=frozenset(finals),
        accept=accept,
        rules=tuple(rules),
    )


def initial_configuration(machine: MachineDef, tape0: Sequence[str], head0: int) -> Configuration:
    """Build the starting configuration: `tape0` under its head at `head0`,
    every auxiliary tape a single blank with its head on cell 0."""

    diags: list[Diagnostic] = []
    readable = set(machine.alphabet) | {BLANK, LEFT_END}
    if not tape0:
        diags.append(Diagnostic(DiagnosticCode.BAD_INITIAL, "the input tape must not be empty", "tape0"))
    for i, tok in enumerate(tape0):
        if not isinstance(tok, str) or tok not in readable:
            diags.append(
                Diagnostic(DiagnosticCode.BAD_INITIAL, f"symbol {tok!r} is not in the alphabet", f"tape0[{i}]")
            )
    if not isinstance(head0, int) or isinstance(head0, bool) or not 0 <= head0 < len(tape0):
        diags.append(
            Diagnostic(DiagnosticCode.BAD_INITIAL, f"head position {head0!r} is outside the input tape", "head0")
        )
    if diags:
        raise InvalidInitial(diags)
    aux = Tape(cells=(BLANK,), head=0)
    return Configuration(
        state=machine.start,
        tapes=(Tape(cells=tuple(tape0), head=head0),) + (aux,) * (machine.tapes - 1),
    )


def read_symbols(cfg: Configuration) -> tuple[str, ...]:
    """The symbol under each head, in tape order."""
    return tuple(t.cells[t.head] for t in cfg.tapes)


def applicable_rules(machine: MachineDef, cfg: Configuration) -> list[TransitionRule]:
    """Rules that can fire in `cfg`, in declaration order.

    A rule applies when every tape's scanned symbol equals the rule's read
    symbol and no L action falls on a head already at cell 0 (the left-edge
    guard: such a rule is simply not applicable).
    """

    reads = read_symbols(cfg)
    out = []
    for rule in machine.rules_from[cfg.state]:
        if rule.read != reads:
            continue
        blocked = False
        for tape, action in zip(cfg.tapes, rule.actions):
            if action.kind == "L" and tape.head == 0:
                blocked = True
                break
        if not blocked:
            out.append(rule)
    return out


def apply_rule(cfg: Configuration, rule: TransitionRule) -> Configuration:
    """Apply one rule to a configuration it matches, yielding the successor.

    R on the rightmost cell grows that tape by one blank first, so heads
    never point past the end; L on cell 0 raises LeftEdgeViolation.
    """

    new_tapes = []
    for tape, action in zip(cfg.tapes, rule.actions):
        if action.kind == "R":
            cells = tape.cells
            if tape.head + 1 == len(cells):
                cells = cells + (BLANK,)
            new_tapes.append(Tape(cells=cells, head=tape.head + 1))
        elif action.kind == "L":
            if tape.head == 0:
                raise LeftEdgeViolation(f"cannot move left of cell 0 on rule from {rule.from_state!r}")
            new_tapes.append(Tape(cells=tape.cells, head=tape.head - 1))
        else:
            assert action.symbol is not None
            if tape.cells[tape.head] == action.symbol:
                new_tapes.append(tape)
            else:
                cells = tape.cells[: tape.head] + (action.symbol,) + tape.cells[tape.head + 1 :]
                new_tapes.append(Tape(cells=cells, head=tape.head))
    return Configuration(state=rule.to_state, tapes=tuple(new_tapes))
