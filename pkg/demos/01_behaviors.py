"""
Behaviors of weighted automata
==============================

An automaton over a semiring S is a triple (alpha, M, beta): a row vector,
one square matrix per letter, and a column vector.  The coefficient of a
word w = a1...ak is alpha M_a1 ... M_ak beta.
"""

from wfasim import BOOL, INF, NAT, TROPICAL, Automaton, behavior_coeff, enumerate_coeffs, word_matrix

# two states over the natural numbers: 'a' moves 0 -> 1, 'b' loops on 1
A = Automaton.build(NAT, 'ab', [1, 0],
                    {'a': [[0, 1], [0, 0]], 'b': [[0, 0], [0, 1]]},
                    [0, 1])
print('M_ab =', word_matrix(A, 'ab').tolist())
print('M_ba =', word_matrix(A, 'ba').tolist())
for w in ('ab', 'ba', 'abbb'):
    print(f'(|A|, {w}) =', behavior_coeff(A, w))

# a scalar automaton: coefficient 1 * 2^k * 3
S = Automaton.build(NAT, 'a', [1], {'a': [[2]]}, [3])
print('aa ->', behavior_coeff(S, 'aa'))

# tropical (min, +): products add weights, sums take minima
T = Automaton.build(TROPICAL, 'a', [0, INF], {'a': [[1, 5], [INF, 0]]}, [INF, 0])
print('tropical:', [(''.join(w) or 'ε', c) for w, c in enumerate_coeffs(T, 3)])

# over the Booleans an automaton is an ordinary NFA; coefficients are membership
N = Automaton.build(BOOL, 'ab', [1, 0],
                    {'a': [[1, 1], [0, 0]], 'b': [[1, 0], [0, 0]]},
                    [0, 1])
print('words ending in a:', [''.join(w) for w, c in enumerate_coeffs(N, 3) if c])
