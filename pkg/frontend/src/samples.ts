// Machine file texts preloaded into the editor.

export const SAMPLES: Record<string, string> = {
  'a_runs (aa* | ab*)': `type: ndfa
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
`,
  'eps_a_runs (ε | aa* | ab*)': `type: ndfa
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
`,
  'aba_ab_star ((aba | ab)*)': `type: ndfa
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
`,
}

export const DEFAULT_SAMPLE = 'a_runs (aa* | ab*)'
