"""Plain-text machine files: strict parser and bit-exact serializer.

Format: the headers `type:`, `states:`, `sigma:`, `start:`, `finals:` and
`rules:` in that order, then one rule per line as `SRC LABEL DST`, where
LABEL is an alphabet symbol or the token `eps`. Blank lines and lines
starting with `#` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .machines import Machine, MachineDef, Rule, is_state_name, is_symbol

EPS_TOKEN = "eps"

_HEADERS = ("type", "states", "sigma", "start", "finals", "rules")
_KINDS = ("ndfa", "dfa")


@dataclass(frozen=True)
class ParseError:
    line: int  # 1-based
    col: int   # 1-based
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, col {self.col}: {self.message}"


class MachineFileError(Exception):
    def __init__(self, errors: list[ParseError]):
        super().__init__("; ".join(str(e) for e in errors))
        self.errors = list(errors)


def _token_cols(raw: str, tokens: list[str]) -> list[int]:
    cols = []
    offset = 0
    for tok in tokens:
        i = raw.index(tok, offset)
        cols.append(i + 1)
        offset = i + len(tok)
    return cols


def parse_machine_file(text: str) -> MachineDef:
    """Parse to a definition; raises MachineFileError with every problem
    found, each carrying its line and column."""
    lines = text.splitlines()
    rows = [(n + 1, raw) for n, raw in enumerate(lines)
            if raw.strip() and not raw.lstrip().startswith("#")]
    errors: list[ParseError] = []

    headers: dict[str, tuple[int, str, str]] = {}
    pos = 0
    for key in _HEADERS:
        if pos >= len(rows):
            errors.append(ParseError(len(lines) + 1, 1, f"missing header {key!r}"))
            raise MachineFileError(errors)
        lineno, raw = rows[pos]
        stripped = raw.strip()
        name, sep, rest = stripped.partition(":")
        name = name.strip()
        if not sep or " " in name:
            errors.append(ParseError(lineno, 1, f"expected header {key!r}"))
            raise MachineFileError(errors)
        if name != key:
            message = (f"expected header {key!r}, got {name!r}"
                       if name in _HEADERS else f"unknown header {name!r}")
            errors.append(ParseError(lineno, 1, message))
            raise MachineFileError(errors)
        headers[key] = (lineno, raw, rest.strip())
        pos += 1

    def value_col(key: str, token: str) -> int:
        lineno, raw, _ = headers[key]
        return raw.index(token, raw.index(":") + 1) + 1

    kind_line, _, kind = headers["type"]
    if kind not in _KINDS:
        col = value_col("type", kind) if kind else 1
        errors.append(ParseError(kind_line, col, f"type must be one of {_KINDS}, got {kind!r}"))

    states = headers["states"][2].split()
    for q in states:
        if not is_state_name(q):
            errors.append(ParseError(headers["states"][0], value_col("states", q),
                                     f"bad state name {q!r}"))
    state_set = set(states)

    sigma = headers["sigma"][2].split()
    for x in sigma:
        if not is_symbol(x):
            errors.append(ParseError(headers["sigma"][0], value_col("sigma", x),
                                     f"bad symbol {x!r}"))
    sigma_set = set(sigma)

    start_toks = headers["start"][2].split()
    if len(start_toks) != 1:
        errors.append(ParseError(headers["start"][0], 1, "start takes exactly one state"))
        start = start_toks[0] if start_toks else ""
    else:
        start = start_toks[0]
        if start not in state_set:
            errors.append(ParseError(headers["start"][0], value_col("start", start),
                                     f"unknown state {start!r}"))

    finals = headers["finals"][2].split()
    for q in finals:
        if q not in state_set:
            errors.append(ParseError(headers["finals"][0], value_col("finals", q),
                                     f"unknown state {q!r}"))

    rules_line, rules_raw, rules_rest = headers["rules"]
    if rules_rest:
        errors.append(ParseError(rules_line, rules_raw.index(rules_rest) + 1,
                                 "unexpected text after 'rules:'"))

    rules: list[Rule] = []
    seen: set[Rule] = set()
    for lineno, raw in rows[pos:]:
        tokens = raw.split()
        if len(tokens) != 3:
            errors.append(ParseError(lineno, 1,
                                     f"expected 'SRC LABEL DST', got {len(tokens)} tokens"))
            continue
        src, label_tok, dst = tokens
        cols = _token_cols(raw, tokens)
        if src not in state_set:
            errors.append(ParseError(lineno, cols[0], f"unknown state {src!r}"))
        if dst not in state_set:
            errors.append(ParseError(lineno, cols[2], f"unknown state {dst!r}"))
        if label_tok == EPS_TOKEN:
            label = None
        elif label_tok in sigma_set:
            label = label_tok
        else:
            errors.append(ParseError(lineno, cols[1],
                                     f"symbol {label_tok!r} not in sigma"))
            continue
        rule = Rule(src, label, dst)
        if rule in seen:
            errors.append(ParseError(lineno, cols[0],
                                     f"duplicate rule ({src} {label_tok} {dst})"))
        seen.add(rule)
        rules.append(rule)

    if errors:
        raise MachineFileError(errors)
    return MachineDef(kind=kind, states=tuple(states), sigma=tuple(sigma),
                      start=start, finals=tuple(finals), rules=tuple(rules))


def serialize_machine(m: Machine | MachineDef) -> str:
    """Canonical text form: fixed header order, single spaces, \\n endings,
    rules in definition order. parse(serialize(m)) revalidates to m."""
    def header(key: str, values: tuple[str, ...]) -> str:
        return f"{key}: {' '.join(values)}" if values else f"{key}:"

    lines = [
        f"type: {m.kind}",
        header("states", m.states),
        header("sigma", m.sigma),
        f"start: {m.start}",
        header("finals", m.finals),
        "rules:",
    ]
    for r in m.rules:
        lines.append(f"{r.src} {EPS_TOKEN if r.label is None else r.label} {r.dst}")
    return "\n".join(lines) + "\n"
