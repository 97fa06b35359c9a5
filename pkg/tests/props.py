"""Randomized property checks shared by the property and acceptance suites.

All randomness comes from seeded `random.Random` instances so every run
checks the same cases.  Machines are kept small (at most six states, two
tapes, short words, thresholds of at most eight) so the naive oracle's
full tree walk stays cheap.
"""

from __future__ import annotations

import random

from fsmlab import engine
from fsmlab.compgraph import build_cmpgraph
from fsmlab.machine import MachineDef, initial_configuration, parse_machine

from .oracles import naive_explore, replay_trace


def random_machine(rng: random.Random) -> MachineDef:
    n_states = rng.randint(1, 6)
    states = [f"q{i}" for i in range(n_states)]
    tapes = rng.randint(1, 2)
    alphabet = ["a", "b"][: rng.randint(0, 2)]
    readable = alphabet + ["_", "@"]
    writable = alphabet + ["_"]
    accept = rng.choice(states[1:]) if n_states > 1 else states[0]
    finals = {accept}
    if n_states > 2 and rng.random() < 0.3:
        finals.add(rng.choice(states[1:]))
    rules = []
    seen: set[tuple] = set()
    fanout: dict[tuple, int] = {}
    for _ in range(rng.randint(2, 8)):
        frm = rng.choice(states)
        # bias reads toward blanks so rules actually fire
        read = tuple("_" if rng.random() < 0.55 else rng.choice(readable) for _ in range(tapes))
        to = rng.choice(states)
        actions = tuple(rng.choice(["L", "R", "R"] + writable) for _ in range(tapes))
        key = (frm, read, to, actions)
        if key in seen or fanout.get((frm, read), 0) >= 3:
            continue
        seen.add(key)
        fanout[(frm, read)] = fanout.get((frm, read), 0) + 1
        rules.append({"from": frm, "read": list(read), "to": to, "actions": list(actions)})
    return parse_machine(
        {
            "name": f"random-{rng.randint(0, 10**6)}",
            "tapes": tapes,
            "states": states,
            "alphabet": alphabet,
            "start": states[0],
            "finals": sorted(finals),
            "accept": accept,
            "rules": rules,
        }
    )


def random_word(rng: random.Random, machine: MachineDef) -> tuple[list[str], int]:
    tokens = list(machine.alphabet) + ["_", "_", "@"]
    length = rng.randint(1, 4)
    word = ["_" if rng.random() < 0.5 else rng.choice(tokens) for _ in range(length)]
    return word, rng.randrange(length)


def check_cmpgraph_is_subgraph(cases: int, seed: int = 20260815) -> int:
    """Every computation graph stays inside its transition diagram."""

    rng = random.Random(seed)
    for _ in range(cases):
        machine = random_machine(rng)
        word, head = random_word(rng, machine)
        graph = build_cmpgraph(machine, word, head, threshold=rng.randint(1, 8))
        assert set(graph.nodes) <= set(machine.states)
        assert set(graph.edges) <= set(machine.rules)
        for rule in graph.edges:
            assert rule.from_state in graph.nodes and rule.to_state in graph.nodes
        assert graph.crimson <= set(graph.nodes)
        assert graph.gold <= set(graph.nodes)
    return cases


def check_engine_matches_naive_enumerator(cases: int, seed: int = 987123) -> int:
    """The breadth-first engine and a recursive enumerator agree on the
    whole tree summary, computation by computation."""

    rng = random.Random(seed)
    for _ in range(cases):
        machine = random_machine(rng)
        word, head = random_word(rng, machine)
        threshold = rng.randint(1, 8)
        ex = engine.explore(machine, word, head, threshold)
        naive = naive_explore(machine, initial_configuration(machine, word, head), threshold)

        got_edges = {
            r: {k for k, on in (("mid", u.as_mid), ("last", u.as_last), ("cutoff", u.as_cutoff)) if on}
            for r, u in ex.edges.items()
        }
        assert got_edges == naive.edges
        assert ex.terminal_states == frozenset(naive.terminal_states)
        assert ex.cutoff_states == frozenset(naive.cutoff_states)
        assert ex.cutoff_count == naive.cutoff_count
        if naive.shortest_accept is None:
            assert ex.accepting_trace is None
        else:
            assert ex.accepting_trace is not None
            assert len(ex.accepting_trace.steps) == naive.shortest_accept

        outcome = engine.apply(machine, word, head, threshold)
        if isinstance(outcome, engine.Unknown):
            assert outcome.cutoff_count >= 1
    return cases


def check_trace_replay(cases: int, seed: int = 4242) -> int:
    """Every trace the engine hands out replays as a real computation."""

    rng = random.Random(seed)
    for _ in range(cases):
        machine = random_machine(rng)
        word, head = random_word(rng, machine)
        ex = engine.explore(machine, word, head, rng.randint(1, 8))
        for trace in (ex.accepting_trace, ex.first_maximal_trace):
            if trace is None:
                continue
            replay_trace(machine, trace)
            assert trace.initial == initial_configuration(machine, word, head)
    return cases


def check_threshold_monotonicity(cases: int, seed: int = 55501) -> int:
    """Raising the threshold never flips an Accept or a Reject."""

    rng = random.Random(seed)
    for _ in range(cases):
        machine = random_machine(rng)
        word, head = random_word(rng, machine)
        low = rng.randint(1, 6)
        high = low + rng.randint(1, 4)
        first = engine.apply(machine, word, head, low)
        second = engine.apply(machine, word, head, high)
        if isinstance(first, engine.Accept):
            assert isinstance(second, engine.Accept)
            assert len(second.trace.steps) <= len(first.trace.steps)
        elif isinstance(first, engine.Reject):
            assert isinstance(second, engine.Reject)
    return cases
