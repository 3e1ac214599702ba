"""Weighted finite automata over exact semirings: behaviors, simulations,
joint automata and budgeted equivalence procedures."""

from wfasim.decide import (Budget, Exhausted, Outcome, Verdict, decide_equiv,
                           search_chain_finite, semidecide_inequivalent, tropical_probe)
from wfasim.errors import (AlphabetMismatch, ParseError, SemiringMismatch, ShapeError,
                           UnsupportedSemiring, WFAError)
from wfasim.joint import (CapExhausted, InequivalenceWitness, JointResult, emit_chain, joint,
                          joint_field, joint_finite, joint_integers)
from wfasim.matrix import Matrix, mat_add, mat_identity, mat_mul, mat_zeros
from wfasim.semiring import (BOOL, INF, INT, NAT, RAT, TROPICAL, Semiring, TableSemiring,
                             boolean_table, check_axioms, gf2, validate_table_semiring, zmod)
from wfasim.simulation import (BACKWARD, FORWARD, ChainCertificate, Link, SimulationCertificate,
                               check_simulation, compose, verify_chain)
from wfasim.wfa import (Automaton, behavior_coeff, enumerate_coeffs, is_deterministic,
                        word_matrix, words)

__version__ = '0.1.0'
