"""
A tropical pair
===============

Over (min, +) the automata below both give the word a^k the weight k, so
no witness exists.  No joint construction is available over this semiring,
so deciding stays INCONCLUSIVE; the probe looks for a single simulation
with small entries in each direction.  Finding nothing within the bound
does not prove that none exists.
"""

from wfasim import INF, TROPICAL, Automaton, Budget, decide_equiv, enumerate_coeffs, tropical_probe

T1 = Automaton.build(TROPICAL, 'a', [0], {'a': [[1]]}, [0])
T2 = Automaton.build(TROPICAL, 'a', [0, 0], {'a': [[1, INF], [INF, 2]]}, [0, INF])
print('T1:', [c for _, c in enumerate_coeffs(T1, 8)])
print('T2:', [c for _, c in enumerate_coeffs(T2, 8)])

print(decide_equiv(T1, T2, Budget(max_word_len=20)))
rep = tropical_probe(T1, T2, entry_bound=4)
print(rep.summary())
for d in rep.directions:
    if d.X is not None:
        print(d.direction, 'X =', d.X.tolist())
