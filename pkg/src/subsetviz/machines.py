"""Finite-state machines: definitions, validation, execution, and equivalence.

Machines are immutable after validation; every operation here is a pure
function, so values can be shared freely across threads.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass, replace
from typing import ClassVar, Iterable

Word = str  # symbols concatenated; "" is the empty word
SuperState = tuple[str, ...]  # lexicographically sorted, duplicate-free

DEAD_NAME = "ds"

_STATE_RE = re.compile(r"[A-Z][A-Za-z0-9]*")
_DEAD_RE = re.compile(r"ds[0-9]*")
_SYMBOL_RE = re.compile(r"[a-z0-9]")


def is_state_name(name: str) -> bool:
    """Uppercase-initial alphanumeric token, or a dead-state name (ds, ds0, ...)."""
    return bool(_STATE_RE.fullmatch(name) or _DEAD_RE.fullmatch(name))


def is_symbol(sym: str) -> bool:
    """Single lowercase letter or digit."""
    return bool(_SYMBOL_RE.fullmatch(sym))


def canon(states: Iterable[str]) -> SuperState:
    """Canonical super state: sorted, duplicate-free tuple."""
    return tuple(sorted(set(states)))


@dataclass(frozen=True)
class Rule:
    """One transition; label None marks an epsilon move."""

    src: str
    label: str | None
    dst: str


@dataclass(frozen=True)
class MachineDef:
    """An unvalidated machine definition, as parsed from user input."""

    kind: str  # "ndfa" | "dfa"
    states: tuple[str, ...]
    sigma: tuple[str, ...]
    start: str
    finals: tuple[str, ...]
    rules: tuple[Rule, ...]
    no_dead: bool = False  # dfa only: caller asserts the relation is total


@dataclass(frozen=True)
class Machine:
    states: tuple[str, ...]
    sigma: tuple[str, ...]
    start: str
    finals: tuple[str, ...]
    rules: tuple[Rule, ...]

    kind: ClassVar[str] = ""


@dataclass(frozen=True)
class Nfa(Machine):
    kind: ClassVar[str] = "ndfa"


@dataclass(frozen=True)
class Dfa(Machine):
    """Validated deterministic machine; the transition function is total."""

    kind: ClassVar[str] = "dfa"


@dataclass(frozen=True)
class Trace:
    """Configurations traversed on a word: (unconsumed input, state) pairs."""

    configs: tuple[tuple[Word, str], ...]
    accepted: bool


@dataclass(frozen=True)
class EquivReport:
    equivalent: bool
    counterexample: Word | None = None


class ValidationError(Exception):
    """Raised with one message per violated machine invariant."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


def _rule_str(r: Rule) -> str:
    return f"{r.src} {'eps' if r.label is None else r.label} {r.dst}"


def validate_machine(mdef: MachineDef) -> Nfa | Dfa:
    """Check every definition invariant and build the machine value.

    A dfa definition without no_dead is completed with a fresh dead state;
    with no_dead set, totality is asserted instead of repaired.
    """
    if mdef.kind not in ("ndfa", "dfa"):
        raise ValidationError([f"unknown machine kind {mdef.kind!r}"])
    errors: list[str] = []
    seen_states: set[str] = set()
    for q in mdef.states:
        if not is_state_name(q):
            errors.append(f"bad state name {q!r}")
        if q in seen_states:
            errors.append(f"duplicate state {q}")
        seen_states.add(q)
    seen_syms: set[str] = set()
    for x in mdef.sigma:
        if not is_symbol(x):
            errors.append(f"bad symbol {x!r}")
        if x in seen_syms:
            errors.append(f"duplicate symbol {x}")
        seen_syms.add(x)
    states = set(mdef.states)
    sigma = set(mdef.sigma)
    if mdef.start not in states:
        errors.append(f"start state {mdef.start} not in states")
    seen_finals: set[str] = set()
    for q in mdef.finals:
        if q not in states:
            errors.append(f"final state {q} not in states")
        if q in seen_finals:
            errors.append(f"duplicate final state {q}")
        seen_finals.add(q)
    seen_rules: set[Rule] = set()
    for r in mdef.rules:
        if r.src not in states:
            errors.append(f"rule ({_rule_str(r)}) source {r.src} not in states")
        if r.dst not in states:
            errors.append(f"rule ({_rule_str(r)}) destination {r.dst} not in states")
        if r.label is not None and r.label not in sigma:
            errors.append(f"rule ({_rule_str(r)}) symbol {r.label!r} not in sigma")
        if r.label is None and mdef.kind == "dfa":
            errors.append(f"epsilon rule in dfa: ({_rule_str(r)})")
        if r in seen_rules:
            errors.append(f"duplicate rule ({_rule_str(r)})")
        seen_rules.add(r)
    if mdef.kind == "dfa":
        seen_keys: set[tuple[str, str]] = set()
        for r in mdef.rules:
            if r.label is None:
                continue
            key = (r.src, r.label)
            if key in seen_keys:
                errors.append(f"multiple rules for ({r.src}, {r.label}) in dfa")
            seen_keys.add(key)
        if mdef.no_dead:
            for q in mdef.states:
                for x in mdef.sigma:
                    if (q, x) not in seen_keys:
                        errors.append(f"missing rule for ({q}, {x}) in total dfa")
    if errors:
        raise ValidationError(errors)
    if mdef.kind == "ndfa":
        return Nfa(mdef.states, mdef.sigma, mdef.start, mdef.finals, mdef.rules)
    completed = mdef if mdef.no_dead else complete_dfa(mdef)
    return Dfa(completed.states, completed.sigma, completed.start,
               completed.finals, completed.rules)


def complete_dfa(mdef: MachineDef) -> MachineDef:
    """Totalize a deterministic definition with a fresh dead state.

    An already-total definition is returned unchanged apart from the
    no_dead flag. The dead state is named "ds", freshened by appending
    digits when that name is taken.
    """
    if mdef.kind != "dfa":
        raise ValueError("complete_dfa requires a dfa definition")
    have = {(r.src, r.label) for r in mdef.rules}
    missing = [(q, x) for q in mdef.states for x in mdef.sigma if (q, x) not in have]
    if not missing:
        return replace(mdef, no_dead=True)
    dead = DEAD_NAME
    n = 0
    while dead in mdef.states:
        dead = f"{DEAD_NAME}{n}"
        n += 1
    rules = list(mdef.rules)
    rules += [Rule(q, x, dead) for q, x in missing]
    rules += [Rule(dead, x, dead) for x in mdef.sigma]
    return replace(mdef, states=mdef.states + (dead,), rules=tuple(rules),
                   no_dead=True)


def _close(states: Iterable[str], rules: tuple[Rule, ...]) -> set[str]:
    """Close a state set under epsilon rules."""
    out = set(states)
    todo = list(out)
    while todo:
        p = todo.pop()
        for r in rules:
            if r.label is None and r.src == p and r.dst not in out:
                out.add(r.dst)
                todo.append(r.dst)
    return out


def epsilon_closure(m: Machine, q: str) -> SuperState:
    """Smallest set containing q and closed under epsilon rules, sorted."""
    if q not in m.states:
        raise ValueError(f"unknown state {q}")
    return canon(_close({q}, m.rules))


def _check_word(m: Machine, w: Word) -> None:
    sigma = set(m.sigma)
    for c in w:
        if c not in sigma:
            raise ValueError(f"symbol {c!r} not in alphabet")


def nfa_apply(m: Nfa, w: Word) -> bool:
    """Subset simulation; True iff some run over w ends in a final state."""
    _check_word(m, w)
    current = _close({m.start}, m.rules)
    for c in w:
        moved = {r.dst for r in m.rules if r.label == c and r.src in current}
        current = _close(moved, m.rules)
    return bool(current & set(m.finals))


def dfa_apply(m: Dfa, w: Word) -> bool:
    """Follow the unique path from start; True iff it ends in a final state."""
    _check_word(m, w)
    step = {(r.src, r.label): r.dst for r in m.rules}
    q = m.start
    for c in w:
        q = step[q, c]
    return q in set(m.finals)


def apply_word(m: Machine, w: Word) -> bool:
    return dfa_apply(m, w) if isinstance(m, Dfa) else nfa_apply(m, w)


def show_transitions(m: Machine, w: Word) -> Trace | None:
    """Configuration trace for w.

    A dfa always yields its unique trace. An ndfa yields a shortest
    accepting trace, ties broken by rule order, or None when it rejects
    (no configurations are reported for an ndfa rejection).
    """
    _check_word(m, w)
    if isinstance(m, Dfa):
        step = {(r.src, r.label): r.dst for r in m.rules}
        q = m.start
        configs = [(w, q)]
        for i, c in enumerate(w):
            q = step[q, c]
            configs.append((w[i + 1:], q))
        return Trace(tuple(configs), q in set(m.finals))
    # Breadth-first search over (state, consumed) configurations; the
    # visited set terminates the search under epsilon cycles.
    finals = set(m.finals)
    start = (m.start, 0)
    parent: dict[tuple[str, int], tuple[str, int] | None] = {start: None}
    queue: deque[tuple[str, int]] = deque([start])
    goal: tuple[str, int] | None = None
    while queue:
        node = queue.popleft()
        q, i = node
        if i == len(w) and q in finals:
            goal = node
            break
        for r in m.rules:
            if r.src != q:
                continue
            if r.label is None:
                nxt = (r.dst, i)
            elif i < len(w) and r.label == w[i]:
                nxt = (r.dst, i + 1)
            else:
                continue
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    if goal is None:
        return None
    path = []
    node: tuple[str, int] | None = goal
    while node is not None:
        path.append(node)
        node = parent[node]
    path.reverse()
    return Trace(tuple((w[i:], q) for q, i in path), True)


def random_equiv_test(m1: Machine, m2: Machine, n: int, max_len: int = 8,
                      seed: int = 0) -> bool:
    """Agreement on n random words from a seeded generator.

    Word length is uniform on [0, max_len]; symbols are i.i.d. uniform over
    the sorted alphabet. Deterministic for a fixed seed.
    """
    if set(m1.sigma) != set(m2.sigma):
        raise ValueError("alphabet mismatch")
    rng = random.Random(seed)
    syms = sorted(m1.sigma)
    for _ in range(n):
        w = "".join(rng.choice(syms) for _ in range(rng.randint(0, max_len)))
        if apply_word(m1, w) != apply_word(m2, w):
            return False
    return True


def exact_equiv(m1: Machine, m2: Machine) -> EquivReport:
    """Exact language equality via the product of the determinized machines.

    Determinization happens on the fly by subset simulation, so this check
    is independent of the conversion pipeline it is commonly used to vet.
    The counterexample, when present, is a shortest distinguishing word,
    ties broken by m1's alphabet order.
    """
    if set(m1.sigma) != set(m2.sigma):
        raise ValueError("alphabet mismatch")
    f1, f2 = set(m1.finals), set(m2.finals)
    start = (frozenset(_close({m1.start}, m1.rules)),
             frozenset(_close({m2.start}, m2.rules)))
    Pair = tuple[frozenset[str], frozenset[str]]
    parent: dict[Pair, tuple[Pair, str] | None] = {start: None}
    queue: deque[Pair] = deque([start])
    while queue:
        node = queue.popleft()
        s1, s2 = node
        if bool(s1 & f1) != bool(s2 & f2):
            word: list[str] = []
            cur = node
            while parent[cur] is not None:
                prev, c = parent[cur]  # type: ignore[misc]
                word.append(c)
                cur = prev
            return EquivReport(False, "".join(reversed(word)))
        for c in m1.sigma:
            n1 = frozenset(_close({r.dst for r in m1.rules
                                   if r.label == c and r.src in s1}, m1.rules))
            n2 = frozenset(_close({r.dst for r in m2.rules
                                   if r.label == c and r.src in s2}, m2.rules))
            nxt = (n1, n2)
            if nxt not in parent:
                parent[nxt] = (node, c)
                queue.append(nxt)
    return EquivReport(True, None)
