"""Subset construction: tables, rule search, naming, and the dfa itself."""

from __future__ import annotations

import pytest
from hypothesis import given

from subsetviz.machines import (MachineDef, Rule, dfa_apply, exact_equiv,
                                nfa_apply, validate_machine)
from subsetviz.samples import (ABA_AB_STAR, ABA_AB_STAR_DFA, A_RUNS,
                               EPS_A_RUNS)
from subsetviz.subset import (SsRule, compute_empties_tbl,
                              compute_ss_dfa_rules, compute_ss_name_tbl,
                              convert, find_reachables, get_reachable,
                              ndfa2dfa)

from conftest import nfa_and_word, words_up_to

ND_EMPTIES = {"S": ("S",), "A": ("A",), "B": ("B",), "C": ("C",),
              "D": ("D", "S"), "E": ("E", "S")}

# Hand-run BFS over ABA_AB_STAR: queue (S) -> (A B), () -> (C D S) -> (A B E S).
ND_SS_RULES = [
    SsRule(("S",), "a", ("A", "B")),
    SsRule(("S",), "b", ()),
    SsRule(("A", "B"), "a", ()),
    SsRule(("A", "B"), "b", ("C", "D", "S")),
    SsRule((), "a", ()),
    SsRule((), "b", ()),
    SsRule(("C", "D", "S"), "a", ("A", "B", "E", "S")),
    SsRule(("C", "D", "S"), "b", ()),
    SsRule(("A", "B", "E", "S"), "a", ("A", "B")),
    SsRule(("A", "B", "E", "S"), "b", ("C", "D", "S")),
]

# Hand-run BFS over A_RUNS: queue (F S) -> (A B), () -> (A), (B).
AA_SS_RULES = [
    SsRule(("F", "S"), "a", ("A", "B")),
    SsRule(("F", "S"), "b", ()),
    SsRule(("A", "B"), "a", ("A",)),
    SsRule(("A", "B"), "b", ("B",)),
    SsRule((), "a", ()),
    SsRule((), "b", ()),
    SsRule(("A",), "a", ("A",)),
    SsRule(("A",), "b", ()),
    SsRule(("B",), "a", ()),
    SsRule(("B",), "b", ("B",)),
]


class TestEmptiesTable:
    def test_aba_ab_star_table(self):
        assert compute_empties_tbl(ABA_AB_STAR) == ND_EMPTIES

    def test_a_runs_table(self):
        assert compute_empties_tbl(A_RUNS) == {
            "S": ("F", "S"), "A": ("A",), "B": ("B",), "F": ("F",)}

    @given(nfa_and_word())
    def test_identity_on_epsilon_free_machines(self, machine_word):
        machine, _ = machine_word
        if any(r.label is None for r in machine.rules):
            return
        assert compute_empties_tbl(machine) == {q: (q,) for q in machine.states}


class TestFindReachables:
    def test_start_row(self):
        empties = compute_empties_tbl(ABA_AB_STAR)
        matrix = find_reachables(("S",), ABA_AB_STAR.sigma, ABA_AB_STAR.rules,
                                 empties)
        assert matrix == [[("A", "B"), ()]]

    def test_two_member_rows(self):
        empties = compute_empties_tbl(ABA_AB_STAR)
        matrix = find_reachables(("A", "B"), ABA_AB_STAR.sigma,
                                 ABA_AB_STAR.rules, empties)
        assert matrix == [[(), ("C",)], [(), ("D", "S")]]

    def test_empty_super_state(self):
        empties = compute_empties_tbl(ABA_AB_STAR)
        assert find_reachables((), ABA_AB_STAR.sigma, ABA_AB_STAR.rules,
                               empties) == []


class TestGetReachable:
    def test_column_union(self):
        empties = compute_empties_tbl(ABA_AB_STAR)
        matrix = find_reachables(("A", "B"), ABA_AB_STAR.sigma,
                                 ABA_AB_STAR.rules, empties)
        assert get_reachable(1, matrix) == ("C", "D", "S")
        assert get_reachable(0, matrix) == ()

    def test_empty_matrix(self):
        assert get_reachable(0, []) == ()
        assert get_reachable(5, []) == ()

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            get_reachable(2, [[(), ()]])


class TestComputeSsDfaRules:
    def test_aba_ab_star_rules_and_order(self):
        assert compute_ss_dfa_rules(ABA_AB_STAR) == ND_SS_RULES

    def test_a_runs_rules_and_order(self):
        assert compute_ss_dfa_rules(A_RUNS) == AA_SS_RULES

    def test_every_super_state_fully_expanded(self, nfa_corpus):
        for machine in nfa_corpus:
            rules = compute_ss_dfa_rules(machine)
            sources = [r.src for r in rules]
            for ss in set(sources):
                outgoing = [r for r in rules if r.src == ss]
                assert len(outgoing) == len(machine.sigma)
                assert [r.sym for r in outgoing] == list(machine.sigma)


class TestComputeSsNameTbl:
    def test_numbering_skips_dead(self):
        table = compute_ss_name_tbl([("S",), ("A", "B"), (), ("C", "D", "S")])
        assert table == {("S",): "Q0", ("A", "B"): "Q1", (): "ds",
                         ("C", "D", "S"): "Q2"}

    def test_dead_alone(self):
        assert compute_ss_name_tbl([()]) == {(): "ds"}

    def test_empty_input(self):
        assert compute_ss_name_tbl([]) == {}

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            compute_ss_name_tbl([("S",), ("S",)])


class TestConvert:
    def test_aba_ab_star_conversion(self):
        artifacts = convert(ABA_AB_STAR)
        assert len(artifacts.dfa.states) == 5
        assert len(artifacts.dfa.rules) == 10
        assert len(artifacts.dfa.finals) == 3
        assert exact_equiv(artifacts.dfa, ABA_AB_STAR_DFA).equivalent

    def test_a_runs_conversion(self):
        artifacts = convert(A_RUNS)
        assert len(artifacts.dfa.states) == 5
        assert "ds" in artifacts.dfa.states
        names = artifacts.names
        assert set(artifacts.dfa.finals) == {names[("A", "B")], names[("A",)],
                                             names[("B",)]}

    def test_deterministic_total_input_needs_no_dead_state(self):
        machine = validate_machine(MachineDef(
            kind="ndfa", states=("S",), sigma=("a", "b"), start="S", finals=(),
            rules=(Rule("S", "a", "S"), Rule("S", "b", "S"))))
        artifacts = convert(machine)
        assert artifacts.dfa.states == ("Q0",)
        assert len(artifacts.dfa.rules) == 2

    def test_rules_are_names_of_ss_rules(self):
        artifacts = convert(ABA_AB_STAR)
        renamed = tuple(Rule(artifacts.names[r.src], r.sym,
                             artifacts.names[r.dst])
                        for r in artifacts.ss_rules)
        assert artifacts.dfa.rules == renamed

    def test_identical_runs_identical_artifacts(self):
        first = convert(ABA_AB_STAR)
        second = convert(ABA_AB_STAR)
        assert first == second
        assert repr(first) == repr(second)

    def test_state_labels(self):
        artifacts = convert(A_RUNS)
        labels = artifacts.state_labels()
        assert labels[artifacts.names[("F", "S")]] == "F,S"
        assert labels["ds"] == "ds"


class TestConvertProperties:
    def test_language_preserved_on_corpus(self, nfa_corpus):
        for machine in nfa_corpus:
            dfa = convert(machine).dfa
            assert exact_equiv(machine, dfa).equivalent
            for word in words_up_to(machine.sigma, 6):
                assert nfa_apply(machine, word) is dfa_apply(dfa, word)

    def test_totality_and_start_and_finals(self, nfa_corpus):
        for machine in nfa_corpus:
            artifacts = convert(machine)
            dfa = artifacts.dfa
            for q in dfa.states:
                assert len([r for r in dfa.rules if r.src == q]) == len(dfa.sigma)
            start_ss = artifacts.empties[machine.start]
            assert dfa.start == artifacts.names[start_ss]
            finals = set(machine.finals)
            for ss, name in artifacts.names.items():
                assert (name in dfa.finals) == bool(finals.intersection(ss))

    def test_closure_soundness(self, nfa_corpus):
        # Recompute every destination straight from delta and the empties.
        for machine in nfa_corpus:
            artifacts = convert(machine)
            for ss_rule in artifacts.ss_rules:
                expected = set()
                for r in machine.rules:
                    if r.label == ss_rule.sym and r.src in ss_rule.src:
                        expected.update(artifacts.empties[r.dst])
                assert ss_rule.dst == tuple(sorted(expected))

    def test_dead_super_state_self_loops(self, nfa_corpus):
        for machine in nfa_corpus:
            for ss_rule in convert(machine).ss_rules:
                if ss_rule.src == ():
                    assert ss_rule.dst == ()


class TestNdfa2Dfa:
    def test_dfa_returned_unchanged(self):
        assert ndfa2dfa(ABA_AB_STAR_DFA) is ABA_AB_STAR_DFA

    def test_nfa_converted_to_equivalent(self):
        assert exact_equiv(ndfa2dfa(ABA_AB_STAR), ABA_AB_STAR_DFA).equivalent

    def test_language_of_converted_sample(self):
        # Independent oracle: the language is ε | a a* | a b*.
        def in_language(word: str) -> bool:
            if word == "":
                return True
            return word[0] == "a" and (all(c == "a" for c in word[1:])
                                       or all(c == "b" for c in word[1:]))

        dfa = ndfa2dfa(EPS_A_RUNS)
        for word in words_up_to(("a", "b"), 6):
            assert dfa_apply(dfa, word) is in_language(word)
