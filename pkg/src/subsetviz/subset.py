"""NFA determinization as a breadth-first search over reachable super states.

Only super states reachable from the closure of the start state are ever
built; the empty super state stands in for the dead state, so the result
is total without a separate completion pass. The tables produced along
the way (empties, rule sequence, name encoding) are kept for inspection.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .machines import (DEAD_NAME, Dfa, MachineDef, Nfa, Rule, SuperState,
                       canon, epsilon_closure, validate_machine)


@dataclass(frozen=True)
class SsRule:
    """One super-state transition of the dfa under construction."""

    src: SuperState
    sym: str
    dst: SuperState


@dataclass(frozen=True)
class ConversionArtifacts:
    """Everything produced alongside the dfa, in discovery order."""

    empties: dict[str, SuperState]
    ss_rules: tuple[SsRule, ...]
    names: dict[SuperState, str]
    dfa: Dfa

    @property
    def super_states(self) -> tuple[SuperState, ...]:
        return tuple(self.names)

    def state_labels(self) -> dict[str, str]:
        """dfa state name -> member listing, for diagram display."""
        return {name: ss_label(ss) for ss, name in self.names.items()}


def ss_label(ss: SuperState) -> str:
    """Display form of a super state; the empty set shows as the dead name."""
    return ",".join(ss) if ss else DEAD_NAME


def compute_empties_tbl(m: Nfa) -> dict[str, SuperState]:
    """Epsilon closure of every state, keyed in state order."""
    return {q: epsilon_closure(m, q) for q in m.states}


def find_reachables(ss: SuperState, sigma: tuple[str, ...],
                    rules: tuple[Rule, ...],
                    empties: dict[str, SuperState]) -> list[list[SuperState]]:
    """One row per member of ss, one column per symbol.

    Cell (p, x) is the closed set of states reachable from p by consuming x.
    """
    return [
        [canon(q
               for r in rules if r.src == p and r.label == x
               for q in empties[r.dst])
         for x in sigma]
        for p in ss
    ]


def get_reachable(i: int, reachables: list[list[SuperState]]) -> SuperState:
    """Union of column i across all rows (empty for an empty matrix)."""
    if reachables and not 0 <= i < len(reachables[0]):
        raise IndexError(f"column {i} out of range")
    return canon(q for row in reachables for q in row[i])


def compute_ss_dfa_rules(m: Nfa) -> list[SsRule]:
    """Breadth-first search seeded with the start state's closure.

    Each dequeued super state emits one rule per alphabet symbol, in sigma
    order; never-seen destinations join the back of the queue, so every
    reachable super state is expanded exactly once.
    """
    empties = compute_empties_tbl(m)
    start_ss = empties[m.start]
    queue: deque[SuperState] = deque([start_ss])
    seen = {start_ss}
    out: list[SsRule] = []
    while queue:
        current = queue.popleft()
        reachables = find_reachables(current, m.sigma, m.rules, empties)
        for i, x in enumerate(m.sigma):
            dst = get_reachable(i, reachables)
            out.append(SsRule(current, x, dst))
            if dst not in seen:
                seen.add(dst)
                queue.append(dst)
    return out


def compute_ss_name_tbl(super_states: list[SuperState]) -> dict[SuperState, str]:
    """Deterministic naming: Q0, Q1, ... in list order; the empty super
    state gets the dead-state name."""
    names: dict[SuperState, str] = {}
    counter = 0
    for ss in super_states:
        if ss in names:
            raise ValueError(f"duplicate super state {ss}")
        if ss:
            names[ss] = f"Q{counter}"
            counter += 1
        else:
            names[ss] = DEAD_NAME
    return names


def convert(m: Nfa) -> ConversionArtifacts:
    """Determinize m, returning the dfa plus the tables used to build it.

    The dfa's start is the name of the first discovered super state, its
    finals are the super states that intersect m's finals, and its rules
    are the super-state rules under the name encoding. The result is total
    by construction.
    """
    empties = compute_empties_tbl(m)
    ss_rules = compute_ss_dfa_rules(m)
    start_ss = empties[m.start]
    supers: list[SuperState] = [start_ss]
    for r in ss_rules:
        for ss in (r.src, r.dst):
            if ss not in supers:
                supers.append(ss)
    names = compute_ss_name_tbl(supers)
    finals = set(m.finals)
    dfa = validate_machine(MachineDef(
        kind="dfa",
        states=tuple(names[ss] for ss in supers),
        sigma=m.sigma,
        start=names[start_ss],
        finals=tuple(names[ss] for ss in supers if finals.intersection(ss)),
        rules=tuple(Rule(names[r.src], r.sym, names[r.dst]) for r in ss_rules),
        no_dead=True,
    ))
    assert isinstance(dfa, Dfa)
    return ConversionArtifacts(empties=empties, ss_rules=tuple(ss_rules),
                               names=names, dfa=dfa)


def ndfa2dfa(m: Nfa | Dfa) -> Dfa:
    """Equivalent dfa; a dfa input is returned unchanged."""
    if isinstance(m, Dfa):
        return m
    return convert(m).dfa
