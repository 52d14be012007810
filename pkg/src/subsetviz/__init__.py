"""Finite automata, reachable-subset determinization, and a bidirectional
step-through visualization of the construction."""

from .machines import (DEAD_NAME, Dfa, EquivReport, Machine, MachineDef, Nfa,
                       Rule, SuperState, Trace, ValidationError, Word,
                       apply_word, canon, complete_dfa, dfa_apply,
                       epsilon_closure, exact_equiv, nfa_apply,
                       random_equiv_test, show_transitions, validate_machine)
from .subset import (ConversionArtifacts, SsRule, compute_empties_tbl,
                     compute_ss_dfa_rules, compute_ss_name_tbl, convert,
                     find_reachables, get_reachable, ndfa2dfa, ss_label)
from .stepper import (AtEndError, AtStartError, DfaNode, EdgePartition,
                      VizSnapshot, VizState, compute_all_hedges, finish,
                      init_viz, reset, snapshot, step_backward, step_forward)
from .dot import (dfa_snapshot_to_dot, machine_to_dot, nfa_partition_to_dot,
                  partition_color)
from .machinefile import (EPS_TOKEN, MachineFileError, ParseError,
                          parse_machine_file, serialize_machine)

__version__ = "0.1.0"
