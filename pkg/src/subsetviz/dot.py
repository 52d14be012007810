"""Transition diagrams in the DOT graph-description language.

Layout is fully delegated to the DOT processor; output is deterministic
byte-for-byte for identical input.
"""

from __future__ import annotations

from .machines import Machine, Rule
from .stepper import EdgePartition, VizSnapshot
from .subset import ss_label

VIOLET = "violet"
GRAY = "gray"
BLACK = "black"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_label(label: str | None, ascii_labels: bool) -> str:
    if label is None:
        return "EMP" if ascii_labels else "ε"
    return label


def _node_line(name: str, is_start: bool, is_final: bool,
               label: str | None = None) -> str:
    attrs = []
    if is_final:
        attrs.append("shape=doublecircle")
    if is_start:
        attrs.append("color=green")
    if label is not None and label != name:
        attrs.append(f"label={_quote(label)}")
    suffix = f" [{', '.join(attrs)}]" if attrs else ""
    return f"  {_quote(name)}{suffix};"


def machine_to_dot(m: Machine, labels: dict[str, str] | None = None,
                   ascii_labels: bool = False) -> str:
    """Whole-machine diagram: green start node, double-circled finals.

    labels optionally maps state names to display labels (used to show
    super-state members on converted dfas).
    """
    finals = set(m.finals)
    lines = ["digraph {", "  rankdir=LR;", "  node [shape=circle];"]
    for q in m.states:
        lines.append(_node_line(q, q == m.start, q in finals,
                                labels.get(q) if labels else None))
    for r in m.rules:
        lines.append(f"  {_quote(r.src)} -> {_quote(r.dst)}"
                     f" [label={_quote(_edge_label(r.label, ascii_labels))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def partition_color(p: EdgePartition, rule: Rule) -> str:
    """Color of one rule; precedence hedges > fedges > bledges."""
    if rule in p.hedges:
        return VIOLET
    if rule in p.fedges:
        return GRAY
    return BLACK


def nfa_partition_to_dot(m: Machine, p: EdgePartition,
                         ascii_labels: bool = False) -> str:
    """Machine diagram with every rule edge colored by its partition class.

    One DOT edge per rule (no label merging), so each rule carries its own
    color.
    """
    covered = p.hedges | p.fedges.keys() | p.bledges
    if covered != set(m.rules):
        raise ValueError("partition does not cover the machine's rules")
    finals = set(m.finals)
    lines = ["digraph {", "  rankdir=LR;", "  node [shape=circle];"]
    for q in m.states:
        lines.append(_node_line(q, q == m.start, q in finals))
    for r in m.rules:
        lines.append(f"  {_quote(r.src)} -> {_quote(r.dst)}"
                     f" [label={_quote(_edge_label(r.label, ascii_labels))},"
                     f" color={partition_color(p, r)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_snapshot_to_dot(s: VizSnapshot) -> str:
    """Partial-dfa diagram: processed super-state rules, newest edge violet.

    Nodes are labeled with the super state's members joined by commas; the
    empty super state shows as the dead name. The dead node is never final.
    """
    lines = ["digraph {", "  rankdir=LR;", "  node [shape=circle];"]
    for node in s.dfa_nodes:
        lines.append(_node_line(ss_label(node.members), node.is_start,
                                node.is_final))
    last = len(s.dfa_edges) - 1
    for i, e in enumerate(s.dfa_edges):
        color = VIOLET if i == last else BLACK
        lines.append(f"  {_quote(ss_label(e.src))} -> {_quote(ss_label(e.dst))}"
                     f" [label={_quote(e.sym)}, color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
