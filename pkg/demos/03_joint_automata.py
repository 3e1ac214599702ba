"""
Joint automata
==============

For equivalent A and B over a finite semiring, a field or the integers one
can build a third automaton C with simulations C -> A and C -> B.  Its
states are generators of the pairs (alpha M_w, gamma N_w); when some pair
gives different coefficients the construction returns the word instead.
"""

from wfasim import BOOL, INT, RAT, Automaton, emit_chain, joint, verify_chain

# over the rationals: 2 + 1 states, the span of the pairs has dimension 2
A = Automaton.build(RAT, 'a', [1, 0], {'a': [[1, 1], [1, 1]]}, [1, 1])
B = Automaton.build(RAT, 'a', [1], {'a': [[2]]}, [1])
res = joint(A, B)
print('mode', res.mode, 'p =', res.dim)
for (x, y), w in zip(res.generators, res.words):
    print('  generator', [str(v) for v in x], '|', [str(v) for v in y], 'reached by', ''.join(w) or 'ε')
print('R_a =', [[str(v) for v in row] for row in res.R('a').tolist()])
print('kappa =', [str(v) for v in res.kappa.row_tuple(0)], ' lambda =', [str(v) for v in res.lam.col_tuple(0)])
print('chain A <- C -> B verifies:', bool(verify_chain(emit_chain(res, A, B), A, B)))

# over the Booleans the joint automaton is deterministic
P = Automaton.build(BOOL, 'a', [1, 0], {'a': [[0, 1], [0, 1]]}, [0, 1])
Q = Automaton.build(BOOL, 'a', [1, 0, 0], {'a': [[0, 1, 0], [0, 0, 1], [0, 1, 0]]}, [0, 1, 1])
res = joint(P, Q)
print('boolean joint: p =', res.dim, 'R_a =', res.R('a').tolist())

# different languages give a witness instead
Q2 = Automaton.build(BOOL, 'a', [1, 0, 0], {'a': [[0, 1, 0], [0, 0, 1], [0, 0, 0]]}, [0, 0, 1])
print('witness:', joint(P, Q2))

# over the integers the generators form a Hermite normal form basis
C = Automaton.build(INT, 'a', [2, 3], {'a': [[1, 0], [0, 0]]}, [1, 1])
res = joint(C, C)
print('integer basis:', res.generators, 'R_a =', res.R('a').tolist())
