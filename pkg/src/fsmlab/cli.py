"""Command line front door.

Exit codes: 0 accept (or plain success), 1 reject, 2 cut off without an
accepting computation, 3 validation failure (diagnostics on stderr, one
per line), 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import subprocess
import sys
from pathlib import Path

from . import engine
from .compgraph import build_cmpgraph, render_cmpgraph
from .diagram import SubsetViolation, render_subdiagram, render_transition_diagram
from .engine import Accept, Reject, Unknown
from .machine import InvalidInitial, MachineDef, MachineValidationError, parse_machine
from .session import SubprocessOracle

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_UNKNOWN = 2
EXIT_INVALID = 3
EXIT_USAGE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Failure(Exception):
    def __init__(self, code: int, lines: list[str]):
        self.code = code
        self.lines = lines


def _load_machine(path: str) -> MachineDef:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as err:
        raise _Failure(EXIT_INVALID, [f"cannot read {path}: {err.strerror or err}"])
    except json.JSONDecodeError as err:
        raise _Failure(EXIT_INVALID, [f"{path} is not valid JSON: {err}"])
    try:
        return parse_machine(obj)
    except MachineValidationError as err:
        raise _Failure(EXIT_INVALID, [str(d) for d in err.diagnostics])


def _word(args: argparse.Namespace) -> list[str]:
    return args.word.split()


def _outcome_exit(outcome: engine.Outcome) -> int:
    if isinstance(outcome, Accept):
        return EXIT_ACCEPT
    if isinstance(outcome, Reject):
        return EXIT_REJECT
    return EXIT_UNKNOWN


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _maybe_render(out: str | None, render: bool) -> None:
    if not render:
        return
    if out is None or out == "-":
        print("--render needs -o so there is a file to render", file=sys.stderr)
        return
    svg = str(Path(out).with_suffix(".svg"))
    try:
        subprocess.run(["dot", "-Tsvg", out, "-o", svg], check=True)
    except (OSError, subprocess.CalledProcessError) as err:
        print(f"could not render {out} with dot: {err}", file=sys.stderr)


def _cmd_validate(args: argparse.Namespace) -> int:
    machine = _load_machine(args.machine)
    print(f"ok: {machine.name}: {len(machine.states)} states, {machine.tapes} tapes, {len(machine.rules)} rules")
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    machine = _load_machine(args.machine)
    try:
        outcome = engine.apply(machine, _word(args), args.head, args.threshold)
    except InvalidInitial as err:
        raise _Failure(EXIT_INVALID, [str(d) for d in err.diagnostics])
    print({Accept: "accept", Reject: "reject", Unknown: "unknown"}[type(outcome)])
    return _outcome_exit(outcome)


def _cmd_trace(args: argparse.Namespace) -> int:
    machine = _load_machine(args.machine)
    try:
        ex = engine.explore(machine, _word(args), args.head, args.threshold)
    except InvalidInitial as err:
        raise _Failure(EXIT_INVALID, [str(d) for d in err.diagnostics])
    if ex.accepting_trace is not None:
        trace, code, word = ex.accepting_trace, EXIT_ACCEPT, "accept"
    elif ex.cutoff_count:
        trace, code, word = ex.first_maximal_trace, EXIT_UNKNOWN, "unknown"
    else:
        trace, code, word = ex.first_maximal_trace, EXIT_REJECT, "reject"
    assert trace is not None
    if args.format == "json":
        print(json.dumps(engine.trace_to_obj(trace), indent=2))
    else:
        print(engine.format_trace(trace))
    if code != EXIT_ACCEPT:
        print(word, file=sys.stderr)
    return code


def _parse_pairs(text: str) -> list[tuple[str, str]]:
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise _Failure(EXIT_USAGE, [f"--from-rules entries look like FROM:TO, got {part!r}"])
        frm, _, to = part.partition(":")
        pairs.append((frm.strip(), to.strip()))
    return pairs


def _cmd_graph(args: argparse.Namespace) -> int:
    machine = _load_machine(args.machine)
    try:
        if args.states is None and args.from_rules is None and args.start is None:
            text = render_transition_diagram(machine)
        else:
            if args.from_rules is not None:
                pairs = set(_parse_pairs(args.from_rules))
                rules = [r for r in machine.rules if (r.from_state, r.to_state) in pairs]
            else:
                rules = None
            if args.states is not None:
                states = [s.strip() for s in args.states.split(",") if s.strip()]
            elif rules is not None:
                states = list(dict.fromkeys(s for r in rules for s in (r.from_state, r.to_state)))
            else:
                states = list(machine.states)
            if rules is None:
                kept = set(states)
                rules = [r for r in machine.rules if r.from_state in kept and r.to_state in kept]
            text = render_subdiagram(machine, states, rules, highlight_start=args.start)
    except SubsetViolation as err:
        raise _Failure(EXIT_INVALID, [str(err)])
    _write_output(text, args.output)
    _maybe_render(args.output, args.render)
    return 0


def _cmd_cmpgraph(args: argparse.Namespace) -> int:
    machine = _load_machine(args.machine)
    try:
        graph = build_cmpgraph(machine, _word(args), args.head, args.threshold)
    except InvalidInitial as err:
        raise _Failure(EXIT_INVALID, [str(d) for d in err.diagnostics])
    _write_output(render_cmpgraph(graph), args.output)
    _maybe_render(args.output, args.render)
    return _outcome_exit(graph.outcome)


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    oracle = SubprocessOracle(shlex.split(args.invariant_cmd)) if args.invariant_cmd else None
    frontend = args.frontend
    if frontend is None:
        default_dir = Path("frontend") / "dist"
        frontend = str(default_dir) if default_dir.is_dir() else None
    app = create_app(oracle=oracle, frontend_dir=frontend, default_threshold=args.threshold)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _default_threshold() -> int:
    raw = os.environ.get("FSMLAB_THRESHOLD")
    if raw is not None:
        try:
            value = int(raw)
            if value >= 1:
                return value
        except ValueError:
            pass
        print(f"ignoring FSMLAB_THRESHOLD={raw!r}: not a positive integer", file=sys.stderr)
    return engine.DEFAULT_THRESHOLD


def _add_word_flags(sub: argparse.ArgumentParser, threshold: int) -> None:
    sub.add_argument("--word", required=True, help="whitespace-separated tape symbols")
    sub.add_argument("--head", required=True, type=int, help="starting head position on the input tape")
    sub.add_argument("--threshold", type=int, default=threshold, help="step cutoff per computation")


def build_parser() -> argparse.ArgumentParser:
    threshold = _default_threshold()
    parser = _Parser(prog="fsmlab", description="Nondeterministic multitape Turing machine workbench")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("validate", help="check a machine file")
    p.add_argument("machine")
    p.set_defaults(func=_cmd_validate)

    p = subs.add_parser("apply", help="run a word, print accept/reject/unknown")
    p.add_argument("machine")
    _add_word_flags(p, threshold)
    p.set_defaults(func=_cmd_apply)

    p = subs.add_parser("trace", help="print the stepped computation, one configuration per line")
    p.add_argument("machine")
    _add_word_flags(p, threshold)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_trace)

    p = subs.add_parser("graph", help="emit the transition diagram (or a subdiagram) as DOT")
    p.add_argument("machine")
    p.add_argument("--states", help="comma-separated states to keep")
    p.add_argument("--from-rules", dest="from_rules", help="comma-separated FROM:TO pairs selecting rules")
    p.add_argument("--start", help="state to highlight green")
    p.add_argument("-o", "--output", help="write DOT here instead of stdout")
    p.add_argument("--render", action="store_true", help="also render an SVG next to -o using dot")
    p.set_defaults(func=_cmd_graph)

    p = subs.add_parser("cmpgraph", help="emit the computation graph for a word as DOT")
    p.add_argument("machine")
    _add_word_flags(p, threshold)
    p.add_argument("-o", "--output", help="write DOT here instead of stdout")
    p.add_argument("--render", action="store_true", help="also render an SVG next to -o using dot")
    p.set_defaults(func=_cmd_cmpgraph)

    p = subs.add_parser("serve", help="serve the HTTP API (and the web UI when built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--frontend", help="directory of static UI files (default: ./frontend/dist when present)")
    p.add_argument("--invariant-cmd", dest="invariant_cmd", help="command launching an external invariant oracle")
    p.add_argument("--threshold", type=int, default=threshold, help="default step cutoff for new sessions")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Failure as failure:
        for line in failure.lines:
            print(line, file=sys.stderr)
        return failure.code


if __name__ == "__main__":
    sys.exit(main())
