"""Sample machines: fixtures for tests, scripts, and the demo UI."""

from .machinefile import parse_machine_file
from .machines import Dfa, Nfa, validate_machine


def _load(text: str) -> Nfa | Dfa:
    return validate_machine(parse_machine_file(text))


# L = (aba | ab)*
ABA_AB_STAR: Nfa = _load("""\
type: ndfa
states: S A B C D E
sigma: a b
start: S
finals: S
rules:
S a A
S a B
A b C
B b D
C a E
D eps S
E eps S
""")

# Hand-built dfa for (aba | ab)*, already total.
ABA_AB_STAR_DFA: Dfa = _load("""\
type: dfa
states: S A B C ds
sigma: a b
start: S
finals: S B C
rules:
S a A
S b ds
A a ds
A b B
B a C
B b ds
C a A
C b B
ds a ds
ds b ds
""")

# L = ε | a a* | a b*
EPS_A_RUNS: Nfa = _load("""\
type: ndfa
states: S A B F
sigma: a b
start: S
finals: A B F
rules:
S a A
S a B
S eps F
A b A
B a B
""")

# L = a a* | a b*
A_RUNS: Nfa = _load("""\
type: ndfa
states: S A B F
sigma: a b
start: S
finals: A B
rules:
S a A
S a B
S eps F
A a A
B b B
""")

ALL = {
    "aba_ab_star": ABA_AB_STAR,
    "aba_ab_star_dfa": ABA_AB_STAR_DFA,
    "eps_a_runs": EPS_A_RUNS,
    "a_runs": A_RUNS,
}
