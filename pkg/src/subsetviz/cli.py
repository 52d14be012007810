"""Command line: convert, trace, equiv, steps, graph, serve.

Exit codes: 0 success (or "equivalent"), 1 semantic negative (machines not
equivalent), 2 usage, parse, or validation errors.
"""

from __future__ import annotations

import argparse
import os
import socket
import sys
from pathlib import Path

from .dot import dfa_snapshot_to_dot, machine_to_dot, nfa_partition_to_dot
from .machinefile import MachineFileError, parse_machine_file, serialize_machine
from .machines import (Dfa, Machine, Nfa, ValidationError, exact_equiv,
                       random_equiv_test, show_transitions, validate_machine)
from .subset import ConversionArtifacts, convert
from .stepper import init_viz, snapshot, step_forward

PORT_ENV = "SUBSETVIZ_PORT"


class _CliError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


def _load_machine(path: str) -> Machine:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(2, f"cannot read {path}: {exc}")
    try:
        return validate_machine(parse_machine_file(text))
    except MachineFileError as exc:
        listing = "\n".join(f"{path}:{e}" for e in exc.errors)
        raise _CliError(2, listing)
    except ValidationError as exc:
        listing = "\n".join(f"{path}: {message}" for message in exc.errors)
        raise _CliError(2, listing)


def _parse_word(token: str) -> str:
    # "EMP" spells the empty word, mirroring how it is printed.
    return "" if token in ("", "EMP") else token


def _word_str(w: str) -> str:
    return w if w else "EMP"


def _paren(ss: tuple[str, ...]) -> str:
    return "(" + " ".join(ss) + ")"


def _format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]

    def fmt(cells: list[str]) -> str:
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    separator = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(headers), separator] + [fmt(row) for row in rows])


def _print_tables(m: Nfa, artifacts: ConversionArtifacts) -> None:
    empties_rows = [[q, _paren(closure)] for q, closure in artifacts.empties.items()]
    print("empties:")
    print(_format_table(["state", "E(state)"], empties_rows))
    print()

    dst_of = {(r.src, r.sym): r.dst for r in artifacts.ss_rules}
    transition_rows = [[_paren(ss)] + [_paren(dst_of[ss, x]) for x in m.sigma]
                       for ss in artifacts.names]
    print("super-state transitions:")
    print(_format_table(["super state", *m.sigma], transition_rows))
    print()

    name_rows = [[_paren(ss), name] for ss, name in artifacts.names.items()]
    print("state names:")
    print(_format_table(["super state", "dfa state"], name_rows))


def _cmd_convert(args: argparse.Namespace) -> int:
    machine = _load_machine(args.path)
    labels = None
    if isinstance(machine, Dfa):
        print("input already deterministic")
        result = machine
    else:
        assert isinstance(machine, Nfa)
        artifacts = convert(machine)
        result = artifacts.dfa
        labels = artifacts.state_labels()
        _print_tables(machine, artifacts)
    try:
        Path(args.out).write_text(serialize_machine(result), encoding="utf-8")
        if args.dot:
            Path(args.dot).write_text(machine_to_dot(result, labels=labels),
                                      encoding="utf-8")
    except OSError as exc:
        raise _CliError(2, str(exc))
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    machine = _load_machine(args.path)
    word = _parse_word(args.word)
    try:
        trace = show_transitions(machine, word)
    except ValueError as exc:
        raise _CliError(2, str(exc))
    if trace is None:
        print("reject")
        return 0
    for unconsumed, state in trace.configs:
        print(f"{_word_str(unconsumed)} {state}")
    print("accept" if trace.accepted else "reject")
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    a = _load_machine(args.a)
    b = _load_machine(args.b)
    try:
        if args.mode == "exact":
            report = exact_equiv(a, b)
            if report.equivalent:
                print("equivalent")
                return 0
            print("not equivalent")
            print(f"counterexample: {_word_str(report.counterexample or '')}")
            return 1
        agree = random_equiv_test(a, b, n=args.n, max_len=args.max_len,
                                  seed=args.seed)
    except ValueError as exc:
        raise _CliError(2, str(exc))
    if agree:
        print("equivalent")
        return 0
    print("not equivalent")
    return 1


def _cmd_steps(args: argparse.Namespace) -> int:
    machine = _load_machine(args.path)
    if not isinstance(machine, Nfa):
        raise _CliError(2, "input machine is already deterministic")
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        vs = init_viz(machine)
        while True:
            snap = snapshot(vs)
            (out_dir / f"nfa_{snap.cursor}.dot").write_text(
                nfa_partition_to_dot(vs.nfa, snap.partition), encoding="utf-8")
            (out_dir / f"dfa_{snap.cursor}.dot").write_text(
                dfa_snapshot_to_dot(snap), encoding="utf-8")
            if not snap.can_forward:
                break
            vs = step_forward(vs)
    except OSError as exc:
        raise _CliError(2, str(exc))
    print(f"wrote {vs.total + 1} snapshot pairs to {out_dir}")
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    machine = _load_machine(args.path)
    text = machine_to_dot(machine)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise _CliError(2, str(exc))
    else:
        print(text, end="")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError as exc:
        raise _CliError(2, f"cannot bind port {args.port}: {exc}")
    finally:
        probe.close()
    app = create_app(static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subsetviz",
        description="Determinize finite automata and step through the construction.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert",
                       help="determinize a machine and print the construction tables")
    p.add_argument("path", help="input machine file")
    p.add_argument("--out", required=True, help="output machine file")
    p.add_argument("--dot", help="also write the result's DOT diagram here")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("trace", help="show the configurations traversed on a word")
    p.add_argument("path", help="input machine file")
    p.add_argument("word", help='input word; "EMP" or "" for the empty word')
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("equiv", help="test two machines for language equality")
    p.add_argument("a", help="first machine file")
    p.add_argument("b", help="second machine file")
    p.add_argument("--mode", choices=("exact", "random"), default="exact")
    p.add_argument("--n", type=int, default=500, help="random words to try")
    p.add_argument("--max-len", type=int, default=8, help="longest random word")
    p.add_argument("--seed", type=int, default=0, help="random generator seed")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("steps",
                       help="export paired nfa/dfa DOT files for every cursor")
    p.add_argument("path", help="input machine file (must be nondeterministic)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_steps)

    p = sub.add_parser("graph", help="write a machine's DOT transition diagram")
    p.add_argument("path", help="input machine file")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("serve", help="run the visualization HTTP service")
    p.add_argument("--port", type=int,
                   default=int(os.environ.get(PORT_ENV, "8000")),
                   help=f"listen port (default from ${PORT_ENV}, else 8000)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", help="serve the web UI's assets from here")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(exc, file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
