"""Shared fixtures: a seeded random-nfa corpus and hypothesis strategies."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from subsetviz.machines import MachineDef, Nfa, Rule, validate_machine

settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")

STATE_POOL = ("A", "B", "C", "D", "E", "F")


def random_nfa(seed: int) -> Nfa:
    """Deterministic small nfa: ≤6 states, ≤2 symbols, ≤12 rules, ≤30% ε."""
    rng = random.Random(seed)
    states = STATE_POOL[: rng.randint(1, 6)]
    sigma = ("a", "b")[: rng.randint(1, 2)]
    start = rng.choice(states)
    finals = tuple(q for q in states if rng.random() < 0.4)
    sym_pool = [(p, x, q) for p in states for x in sigma for q in states]
    eps_pool = [(p, None, q) for p in states for q in states]
    rng.shuffle(sym_pool)
    rng.shuffle(eps_pool)
    n_rules = rng.randint(1, 12)
    n_eps = rng.randint(0, int(0.3 * n_rules))
    triples = eps_pool[:n_eps] + sym_pool[: n_rules - n_eps]
    rng.shuffle(triples)
    machine = validate_machine(MachineDef(
        kind="ndfa", states=tuple(states), sigma=sigma, start=start,
        finals=finals, rules=tuple(Rule(*t) for t in triples)))
    assert isinstance(machine, Nfa)
    return machine


@pytest.fixture(scope="session")
def nfa_corpus() -> list[Nfa]:
    return [random_nfa(seed) for seed in range(100)]


def words_up_to(sigma: tuple[str, ...], max_len: int):
    for n in range(max_len + 1):
        for combo in itertools.product(sigma, repeat=n):
            yield "".join(combo)


@st.composite
def nfas(draw) -> Nfa:
    n = draw(st.integers(1, 5))
    states = STATE_POOL[:n]
    sigma = ("a", "b")[: draw(st.integers(1, 2))]
    start = states[draw(st.integers(0, n - 1))]
    finals = tuple(q for q in states if draw(st.booleans()))
    pool = [(p, x, q) for p in states for x in (*sigma, None) for q in states]
    triples = draw(st.lists(st.sampled_from(pool), unique=True, max_size=10))
    machine = validate_machine(MachineDef(
        kind="ndfa", states=tuple(states), sigma=sigma, start=start,
        finals=finals, rules=tuple(Rule(*t) for t in triples)))
    assert isinstance(machine, Nfa)
    return machine


@st.composite
def nfa_and_word(draw, max_len: int = 6):
    machine = draw(nfas())
    word = draw(st.text(alphabet=machine.sigma, max_size=max_len))
    return machine, word


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call":
                continue
            if "test_acceptance" in report.nodeid:
                rows.append((report.nodeid.split("::")[-1], outcome))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, outcome in rows:
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"{status}  {name}")
