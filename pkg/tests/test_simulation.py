import itertools
import random

import pytest

from wfasim import (BACKWARD, BOOL, FORWARD, INT, NAT, RAT, TROPICAL, Automaton, ChainCertificate,
                    Link, Matrix, SimulationCertificate, behavior_coeff, check_simulation, compose,
                    mat_identity, verify_chain, words)
from wfasim.errors import AlphabetMismatch, SemiringMismatch, ShapeError, WFAError
from wfasim.matrix import mat_zeros

from helpers import certified_pair, split_backward, split_forward, random_automaton


@pytest.fixture
def nat_pair():
    A = Automaton.build(NAT, 'a', [1, 0], {'a': [[1, 1], [1, 1]]}, [1, 1])
    B = Automaton.build(NAT, 'a', [1], {'a': [[2]]}, [1])
    return A, B, Matrix(NAT, [[1], [1]])


def test_identity_simulation(nat_pair):
    A, _, _ = nat_pair
    assert check_simulation(A, A, mat_identity(NAT, 2))


def test_nat_example_passes(nat_pair):
    A, B, X = nat_pair
    rep = check_simulation(A, B, X)
    assert rep.ok and str(rep) == 'pass'


def test_zero_matrix_fails_at_final(nat_pair):
    A, B, _ = nat_pair
    # alpha = 0 keeps the initial identity satisfied so the final one is reached
    A0 = Automaton.build(NAT, 'a', [0, 0], {'a': [[1, 1], [1, 1]]}, [1, 1])
    B0 = Automaton.build(NAT, 'a', [0], {'a': [[2]]}, [1])
    rep = check_simulation(A0, B0, mat_zeros(NAT, 2, 1))
    assert not rep
    assert rep.identity == 'final' and rep.index == (0, 0)
    rep = check_simulation(A, B, mat_zeros(NAT, 2, 1))
    assert rep.identity == 'initial'


def test_transition_failure_names_letter():
    A = Automaton.build(NAT, 'ab', [1], {'a': [[1]], 'b': [[2]]}, [1])
    B = Automaton.build(NAT, 'ab', [1], {'a': [[1]], 'b': [[3]]}, [1])
    rep = check_simulation(A, B, Matrix(NAT, [[1]]))
    assert (rep.identity, rep.letter, rep.index, rep.lhs, rep.rhs) == ('transition', 'b', (0, 0), 2, 3)


def test_mismatch_errors(nat_pair):
    A, B, X = nat_pair
    with pytest.raises(ShapeError):
        check_simulation(A, B, Matrix(NAT, [[1, 1]]))
    with pytest.raises(SemiringMismatch):
        check_simulation(A, Automaton.build(INT, 'a', [1], {'a': [[2]]}, [1]), X)
    with pytest.raises(AlphabetMismatch):
        check_simulation(A, Automaton.build(NAT, 'b', [1], {'b': [[2]]}, [1]), X)


def test_compose(nat_pair):
    A, B, X = nat_pair
    c = SimulationCertificate(A, B, X)
    idA = SimulationCertificate(A, A, mat_identity(NAT, 2))
    idB = SimulationCertificate(B, B, mat_identity(NAT, 1))
    assert compose(idA, idA).X == mat_identity(NAT, 2)
    c2 = compose(c, idB)
    assert c2.X == X and c2.check()
    assert compose(idA, c).X == X
    with pytest.raises(WFAError):
        compose(idB, c)


def test_compose_preserves_validity_random():
    rng = random.Random(3)
    for S in (BOOL, NAT, INT, RAT, TROPICAL):
        for _ in range(30):
            C = random_automaton(S, 'ab', rng.randint(1, 2), rng)
            A, X1 = split_forward(C, rng.randint(C.dim, 3), rng)      # A -> C
            B, X2 = split_backward(C, rng.randint(C.dim, 3), rng)     # C -> B
            c = compose(SimulationCertificate(A, C, X1), SimulationCertificate(C, B, X2))
            assert c.check()


def test_soundness_exhaustive_words():
    rng = random.Random(17)
    for S in (BOOL, NAT, INT, RAT, TROPICAL):
        for _ in range(20):
            A, B, X = certified_pair(S, 'ab', rng, max_dim=3)
            assert check_simulation(A, B, X)
            for w in words('ab', 6):
                assert behavior_coeff(A, w) == behavior_coeff(B, w)


def test_direction_matters():
    # A -> B holds via X = (0 1)^T, but no 1x2 Boolean matrix simulates B -> A.
    A = Automaton.build(BOOL, 'a', [0, 1], {'a': [[0, 0], [1, 1]]}, [0, 1])
    B = Automaton.build(BOOL, 'a', [1], {'a': [[1]]}, [1])
    assert check_simulation(A, B, Matrix(BOOL, [[0], [1]]))
    for flat in itertools.product((0, 1), repeat=2):
        assert not check_simulation(B, A, Matrix(BOOL, [list(flat)]))


def test_chain_length_zero(nat_pair):
    A, B, _ = nat_pair
    assert verify_chain(ChainCertificate((A,), ()), A, A)
    rep = verify_chain(ChainCertificate((A,), ()), A, B)
    assert not rep and rep.link is None


def test_chain_two_links_and_corruption(nat_pair):
    A, B, X = nat_pair
    # A <-E- A -X-> B
    chain = ChainCertificate((A, A, B), (Link(BACKWARD, mat_identity(NAT, 2)), Link(FORWARD, X)))
    assert verify_chain(chain, A, B)
    bad = ChainCertificate((A, A, B), (Link(BACKWARD, mat_identity(NAT, 2)),
                                       Link(FORWARD, X.replace(1, 0, 2))))
    rep = verify_chain(bad, A, B)
    assert not rep and rep.link == 2 and rep.detail.identity == 'transition'
    wrong_shape = ChainCertificate((A, B), (Link(BACKWARD, X),))
    rep = verify_chain(wrong_shape, A, B)
    assert rep.link == 1 and 'malformed' in rep.reason


def test_chain_structure_errors(nat_pair):
    A, B, X = nat_pair
    with pytest.raises(ShapeError):
        ChainCertificate((A, B), ())
    with pytest.raises(ValueError):
        Link('sideways', X)
