"""
Simulations and chains
======================

A matrix X simulates A = (alpha, M, beta) by B = (gamma, N, delta) when
alpha X = gamma, M_a X = X N_a for every letter, and beta = X delta.
Simulations compose, and a chain of them (in either direction) proves that
the two ends have the same behavior.
"""

from wfasim import (BACKWARD, BOOL, FORWARD, NAT, Automaton, ChainCertificate, Link, Matrix,
                    SimulationCertificate, check_simulation, compose, mat_identity, verify_chain)

A = Automaton.build(NAT, 'a', [1, 0], {'a': [[1, 1], [1, 1]]}, [1, 1])
B = Automaton.build(NAT, 'a', [1], {'a': [[2]]}, [1])
X = Matrix(NAT, [[1], [1]])
print('A -X-> B:', check_simulation(A, B, X))

# a failing check names the identity and the entry that broke
bad = X.replace(1, 0, 2)
rep = check_simulation(A, B, bad)
print('corrupted:', rep)

# composing with an identity leaves the matrix alone
c = compose(SimulationCertificate(A, B, X), SimulationCertificate(B, B, mat_identity(NAT, 1)))
print('composed matrix:', c.X.tolist(), c.check())

# direction matters: here A -> B exists but no 1x2 Boolean matrix goes B -> A
P = Automaton.build(BOOL, 'a', [0, 1], {'a': [[0, 0], [1, 1]]}, [0, 1])
Q = Automaton.build(BOOL, 'a', [1], {'a': [[1]]}, [1])
print('P -> Q:', check_simulation(P, Q, Matrix(BOOL, [[0], [1]])))
print('Q -> P candidates passing:',
      sum(bool(check_simulation(Q, P, Matrix(BOOL, [[x, y]]))) for x in (0, 1) for y in (0, 1)))

# a two-link chain A <-E- A -X-> B
chain = ChainCertificate((A, A, B), (Link(BACKWARD, mat_identity(NAT, 2)), Link(FORWARD, X)))
print('chain:', verify_chain(chain, A, B))
