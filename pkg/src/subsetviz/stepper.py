"""Bidirectional stepping over a conversion.

The canonical state is a cursor k into the precomputed super-state rule
sequence: rules[:k] are processed. Everything shown at a cursor — the
partial dfa diagram and the three-way partition of the nfa's edges — is
derived from scratch, which makes forward/backward/finish trivially
consistent with each other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from .machines import Nfa, Rule, SuperState
from .subset import ConversionArtifacts, SsRule, convert


class AtStartError(Exception):
    """Backward step requested at cursor 0."""

    code = "at-start"


class AtEndError(Exception):
    """Forward step requested with every super-state rule processed."""

    code = "at-end"


@dataclass(frozen=True)
class EdgePartition:
    """Three-way split of the nfa's rules.

    hedges justify the newest dfa edge (violet); fedges were used by
    earlier dfa edges, counted with multiplicity (gray); bledges are not
    yet used (black). hedges may overlap fedges; rendering precedence is
    hedges > fedges > bledges.
    """

    hedges: frozenset[Rule]
    fedges: dict[Rule, int]
    bledges: frozenset[Rule]


@dataclass(frozen=True)
class DfaNode:
    members: SuperState
    is_start: bool
    is_final: bool


@dataclass(frozen=True)
class VizSnapshot:
    cursor: int
    total: int
    dfa_nodes: tuple[DfaNode, ...]
    dfa_edges: tuple[SsRule, ...]
    highlight: SsRule | None  # newest dfa edge; None only at cursor 0
    partition: EdgePartition
    can_forward: bool
    can_backward: bool


@dataclass(frozen=True)
class VizState:
    nfa: Nfa
    artifacts: ConversionArtifacts
    cursor: int

    @property
    def total(self) -> int:
        return len(self.artifacts.ss_rules)


def init_viz(m: Nfa) -> VizState:
    """Precompute the whole conversion and park the cursor at 0."""
    return VizState(nfa=m, artifacts=convert(m), cursor=0)


def compute_all_hedges(rules: tuple[Rule, ...], target: SuperState,
                       edge: SsRule | None = None) -> frozenset[Rule]:
    """Nfa edges justifying one dfa edge.

    With an edge (P x Q): every rule consuming x from a state in P, plus
    every epsilon rule leaving a state of Q (Q is closed, so these are the
    epsilon moves taken right after consuming x). With no edge — the
    initial state — just the epsilon rules leaving states of the target.
    """
    members = set(target)
    hedges = {r for r in rules if r.label is None and r.src in members}
    if edge is not None:
        sources = set(edge.src)
        hedges |= {r for r in rules if r.label == edge.sym and r.src in sources}
    return frozenset(hedges)


def _hedge_history(vs: VizState) -> list[frozenset[Rule]]:
    """Index 0: initial hedges; index i >= 1: hedges of the i-th rule."""
    rules = vs.nfa.rules
    start_ss = vs.artifacts.empties[vs.nfa.start]
    history = [compute_all_hedges(rules, start_ss)]
    history += [compute_all_hedges(rules, e.dst, e) for e in vs.artifacts.ss_rules]
    return history


def snapshot(vs: VizState) -> VizSnapshot:
    """Derive the full visual state at the current cursor."""
    k = vs.cursor
    history = _hedge_history(vs)
    hedges = history[k]
    fedges: Counter[Rule] = Counter()
    for used in history[:k]:
        fedges.update(used)
    bledges = frozenset(vs.nfa.rules) - hedges - fedges.keys()
    edges = vs.artifacts.ss_rules[:k]
    start_ss = vs.artifacts.empties[vs.nfa.start]
    finals = set(vs.nfa.finals)
    included: list[SuperState] = [start_ss]
    for e in edges:
        for ss in (e.src, e.dst):
            if ss not in included:
                included.append(ss)
    return VizSnapshot(
        cursor=k,
        total=vs.total,
        dfa_nodes=tuple(DfaNode(ss, ss == start_ss, bool(finals.intersection(ss)))
                        for ss in included),
        dfa_edges=edges,
        highlight=edges[-1] if edges else None,
        partition=EdgePartition(hedges=hedges, fedges=dict(fedges),
                                bledges=bledges),
        can_forward=k < vs.total,
        can_backward=k > 0,
    )


def step_forward(vs: VizState) -> VizState:
    if vs.cursor >= vs.total:
        raise AtEndError("every super-state rule is already processed")
    return replace(vs, cursor=vs.cursor + 1)


def step_backward(vs: VizState) -> VizState:
    if vs.cursor <= 0:
        raise AtStartError("cursor is at the initial state")
    return replace(vs, cursor=vs.cursor - 1)


def finish(vs: VizState) -> VizState:
    """Jump to the end; identical to stepping forward to exhaustion."""
    return replace(vs, cursor=vs.total)


def reset(vs: VizState) -> VizState:
    return replace(vs, cursor=0)
