"""
Deciding equivalence
====================

decide_equiv answers EQUIVALENT with a verified chain, INEQUIVALENT with a
recomputed witness word, or INCONCLUSIVE when no complete procedure applies
and the budget runs out.
"""

from wfasim import (BOOL, NAT, Automaton, Budget, decide_equiv, search_chain_finite,
                    semidecide_inequivalent)

print(Budget().explain())

one = Automaton.build(NAT, 'a', [1], {'a': [[1]]}, [1])
two = Automaton.build(NAT, 'a', [1], {'a': [[2]]}, [1])
print('word search:', semidecide_inequivalent(one, two))
print('same automaton, 5 letters max:', semidecide_inequivalent(one, one, Budget(max_word_len=5)))

# both accept a*, yet neither simulates the other; a one-state middle automaton links them
A = Automaton.build(BOOL, 'a', [1, 1], {'a': [[0, 1], [1, 1]]}, [0, 1])
B = Automaton.build(BOOL, 'a', [0, 1], {'a': [[0, 1], [0, 1]]}, [0, 1])
chain = search_chain_finite(A, B)
for link, C in zip(chain.links, chain.automata[1:]):
    print(f'  {link.direction} link, X = {link.X.tolist()}, next automaton dim {C.dim}')

for strategy in ('auto', 'search'):
    v = decide_equiv(A, B, strategy=strategy)
    print(strategy, '->', v, 'via', v.method, 'with a chain of length', len(v.chain))

# the natural numbers have no construction here; equal automata stay inconclusive
v = decide_equiv(one, one, Budget(max_word_len=6))
print('nat:', v, [f'{e.procedure}: {e.detail}' for e in v.exhausted])
