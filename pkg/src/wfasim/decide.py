"""Budgeted equivalence procedures.

* :func:`semidecide_inequivalent` enumerates words in length-lex order and
  stops at the first coefficient mismatch.
* :func:`search_chain_finite` enumerates chains of simulations over a finite
  semiring (intermediate automata and link matrices drawn from the carrier).
* :func:`decide_equiv` dispatches to the joint constructions where they
  exist (finite semirings, fields, the integers) and otherwise falls back to
  the semidecision procedures, answering INCONCLUSIVE when the budget runs out.
* :func:`tropical_probe` additionally looks for a single bounded simulation
  matrix between two tropical automata.
"""

import enum
import itertools
from dataclasses import asdict, dataclass, field
from typing import Optional

from wfasim.errors import AlphabetMismatch, SemiringMismatch, UnsupportedSemiring
from wfasim.joint import (CapExhausted, InequivalenceWitness, JointResult, emit_chain,
                          joint_field, joint_finite, joint_integers, recheck_witness)
from wfasim.matrix import Matrix, same_semiring
from wfasim.semiring import INF, INT, TROPICAL
from wfasim.simulation import (BACKWARD, FORWARD, ChainCertificate, Link, check_simulation,
                               verify_chain)
from wfasim.wfa import Automaton, enumerate_coeffs

CHAIN_BATCH = 64


@dataclass
class Budget:
    max_word_len: int = 12
    max_chain_len: int = 2
    max_intermediate_dim: Optional[int] = None   # None means m + n
    max_steps: int = 10**6
    integer_cap: int = 64

    def __post_init__(self):
        for k, v in asdict(self).items():
            if v is not None and (not isinstance(v, int) or v < 0):
                raise ValueError(f'budget field {k} must be a non-negative integer, got {v!r}')

    def intermediate_dim(self, A, B):
        if self.max_intermediate_dim is None:
            return A.dim + B.dim
        return self.max_intermediate_dim

    def explain(self):
        return '\n'.join([
            f'max_word_len = {self.max_word_len}  (longest word compared when searching for a witness)',
            f'max_chain_len = {self.max_chain_len}  (longest chain of simulations searched, finite semirings)',
            f'max_intermediate_dim = {"m + n" if self.max_intermediate_dim is None else self.max_intermediate_dim}'
            '  (largest intermediate automaton in the chain search)',
            f'max_steps = {self.max_steps}  (candidate cap for chain / simulation searches)',
            f'integer_cap = {self.integer_cap}  (longest word explored by the integer joint construction)',
        ])


@dataclass(frozen=True)
class Exhausted:
    procedure: str
    explored: int
    detail: str = ''

    def __bool__(self):
        return False


class Outcome(str, enum.Enum):
    EQUIVALENT = 'EQUIVALENT'
    INEQUIVALENT = 'INEQUIVALENT'
    INCONCLUSIVE = 'INCONCLUSIVE'


@dataclass
class Verdict:
    outcome: Outcome
    method: str
    chain: Optional[ChainCertificate] = None
    witness: Optional[InequivalenceWitness] = None
    joint: Optional[JointResult] = None
    exhausted: list = field(default_factory=list)

    def __str__(self):
        return self.outcome.value


def _require_compatible(A, B):
    if not same_semiring(A.semiring, B.semiring):
        raise SemiringMismatch(f'{A.semiring.name} vs {B.semiring.name}')
    if A.alphabet != B.alphabet:
        raise AlphabetMismatch(f'{A.alphabet} vs {B.alphabet}')


def _word_stream(A, B, max_len):
    """Yield ``(word, witness or None)`` in length-lex order."""
    S = A.semiring
    for (w, x), (_, y) in zip(enumerate_coeffs(A, max_len), enumerate_coeffs(B, max_len)):
        yield w, (None if S.eq(x, y) else InequivalenceWitness(w, x, y))


def semidecide_inequivalent(A, B, budget=None):
    """First word (length-lex, up to ``budget.max_word_len``) where A and B differ."""
    budget = budget or Budget()
    _require_compatible(A, B)
    n = 0
    for _, wit in _word_stream(A, B, budget.max_word_len):
        n += 1
        if wit:
            return wit
    return Exhausted('inequivalence', n, f'all {n} words of length <= {budget.max_word_len} agree')


# --- chain search over finite semirings ---------------------------------------

def _matrices(S, rows, cols, entries):
    for flat in itertools.product(entries, repeat=rows * cols):
        yield Matrix._raw(S, tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows)),
                          rows, cols)


def _simulation_search(P, Q, entries):
    """Yield None per rejected candidate, then a simulation ``P -> Q`` if one exists."""
    for X in _matrices(P.semiring, P.dim, Q.dim, entries):
        if check_simulation(P, Q, X):
            yield X
            return
        yield None


def _link_search(P, Q, entries):
    """Forward candidates first, then backward.  Yields None per step, a Link on success."""
    for direction, (src, dst) in ((FORWARD, (P, Q)), (BACKWARD, (Q, P))):
        for X in _simulation_search(src, dst, entries):
            if X is None:
                yield None
            else:
                yield Link(direction, X)
                return


def _automata(S, alphabet, d):
    """Every automaton of dimension d with entries from the carrier."""
    k = len(alphabet)
    carrier = S.carrier
    for flat in itertools.product(carrier, repeat=d + k * d * d + d):
        alpha = Matrix._raw(S, (tuple(flat[:d]),), 1, d)
        trans = []
        off = d
        for _ in range(k):
            trans.append(Matrix._raw(S, tuple(tuple(flat[off + i * d: off + (i + 1) * d])
                                               for i in range(d)), d, d))
            off += d * d
        beta = Matrix._raw(S, tuple((x,) for x in flat[off:]), d, 1)
        yield Automaton(S, alphabet, alpha, tuple(trans), beta)


def _chain_candidates(A, B, max_len, max_dim):
    """Fixed-order chain search.  Yields None per examined candidate and a chain when found.

    Chains are tried by increasing length; the intermediate automata by
    increasing dimension and then lexicographically over the carrier; each
    link is the first simulation found, forward before backward.
    """
    S = A.semiring
    entries = S.carrier
    if A == B:
        yield ChainCertificate((A,), ())
        return

    def extend(autos, links, remaining):
        last = autos[-1]
        if remaining == 1:
            for link in _link_search(last, B, entries):
                if link is None:
                    yield None
                else:
                    yield ChainCertificate(autos + (B,), links + (link,))
                    return
            return
        for d in range(1, max_dim + 1):
            for C in _automata(S, A.alphabet, d):
                yield None
                for link in _link_search(last, C, entries):
                    if link is None:
                        yield None
                        continue
                    for item in extend(autos + (C,), links + (link,), remaining - 1):
                        yield item
                        if item is not None:
                            return
                    break

    for k in range(1, max_len + 1):
        for item in extend((A,), (), k):
            yield item
            if item is not None:
                return


def search_chain_finite(A, B, budget=None):
    """Search for a chain of simulations connecting A and B over a finite semiring.

    The search space grows like |S|^(d^2 |alphabet|) per intermediate
    automaton of dimension d, so this is only usable on tiny instances.
    """
    budget = budget or Budget()
    _require_compatible(A, B)
    if not A.semiring.is_finite:
        raise UnsupportedSemiring(f'chain search needs a finite semiring, not {A.semiring.name}')
    steps = 0
    for item in _chain_candidates(A, B, budget.max_chain_len, budget.intermediate_dim(A, B)):
        if item is not None:
            return item
        steps += 1
        if steps >= budget.max_steps:
            return Exhausted('chain-search', steps, 'step budget exhausted')
    return Exhausted('chain-search', steps,
                     f'no chain of length <= {budget.max_chain_len} with intermediate '
                     f'dimension <= {budget.intermediate_dim(A, B)}')


# --- decision -------------------------------------------------------------------

def _checked(verdict, A, B):
    """Re-verify the evidence attached to a verdict before handing it out."""
    if verdict.outcome is Outcome.EQUIVALENT:
        if not verify_chain(verdict.chain, A, B):
            raise AssertionError('emitted chain does not verify')
    elif verdict.outcome is Outcome.INEQUIVALENT:
        if not recheck_witness(verdict.witness, A, B):
            raise AssertionError('emitted witness does not recompute')
    return verdict


def _from_joint(res, A, B, method):
    if isinstance(res, InequivalenceWitness):
        return Verdict(Outcome.INEQUIVALENT, method, witness=res)
    return Verdict(Outcome.EQUIVALENT, method, chain=emit_chain(res, A, B), joint=res)


def _interleaved(A, B, budget):
    """Round-robin: one word of the witness search, then a batch of chain candidates."""
    words = _word_stream(A, B, budget.max_word_len)
    chains = _chain_candidates(A, B, budget.max_chain_len, budget.intermediate_dim(A, B))
    n_words = n_steps = 0
    words_done = chains_done = False
    while not (words_done and chains_done):
        if not words_done:
            try:
                _, wit = next(words)
                n_words += 1
                if wit:
                    return Verdict(Outcome.INEQUIVALENT, 'interleaved', witness=wit)
            except StopIteration:
                words_done = True
        if not chains_done:
            for _ in range(CHAIN_BATCH):
                try:
                    item = next(chains)
                except StopIteration:
                    chains_done = True
                    break
                if item is not None:
                    return Verdict(Outcome.EQUIVALENT, 'interleaved', chain=item)
                n_steps += 1
                if n_steps >= budget.max_steps:
                    chains_done = True
                    break
    return Verdict(Outcome.INCONCLUSIVE, 'interleaved', exhausted=[
        Exhausted('inequivalence', n_words), Exhausted('chain-search', n_steps)])


def decide_equiv(A, B, budget=None, strategy='auto'):
    """Decide whether A and B have the same behavior.

    With ``strategy='auto'`` finite semirings, fields and the integers go
    through the matching joint construction, which is a complete decision
    procedure (up to ``integer_cap`` for the integers).  Other semirings only
    get the word search and may come back INCONCLUSIVE.  ``strategy='search'``
    forces the interleaved word / chain search on a finite semiring.
    Every EQUIVALENT verdict carries a verified chain and every INEQUIVALENT
    verdict a recomputed witness.
    """
    budget = budget or Budget()
    _require_compatible(A, B)
    S = A.semiring
    if strategy not in ('auto', 'search'):
        raise ValueError(f'unknown strategy {strategy!r}')
    if strategy == 'search':
        if not S.is_finite:
            raise UnsupportedSemiring('chain search needs a finite semiring')
        return _checked(_interleaved(A, B, budget), A, B)
    if S.is_finite:
        return _checked(_from_joint(joint_finite(A, B), A, B, 'joint-finite'), A, B)
    if S.is_field:
        return _checked(_from_joint(joint_field(A, B), A, B, 'joint-field'), A, B)
    if S is INT:
        res = joint_integers(A, B, budget.integer_cap)
        if not isinstance(res, CapExhausted):
            return _checked(_from_joint(res, A, B, 'joint-integer'), A, B)
        wit = semidecide_inequivalent(A, B, budget)
        if wit:
            return _checked(Verdict(Outcome.INEQUIVALENT, 'word-search', witness=wit), A, B)
        return Verdict(Outcome.INCONCLUSIVE, 'joint-integer', exhausted=[
            Exhausted('joint-integer', res.iterations, f'module still growing, rank {res.rank}'), wit])
    wit = semidecide_inequivalent(A, B, budget)
    if wit:
        return _checked(Verdict(Outcome.INEQUIVALENT, 'word-search', witness=wit), A, B)
    return Verdict(Outcome.INCONCLUSIVE, 'word-search', exhausted=[wit])


# --- tropical probe ---------------------------------------------------------------

@dataclass
class DirectionOutcome:
    direction: str        # 'A->B' or 'B->A'
    status: str           # 'found', 'none-within-bound', 'budget-exhausted'
    candidates: int
    X: Optional[Matrix] = None


@dataclass
class ProbeReport:
    outcome: str          # 'witness', 'simulation', 'neither-within-budget'
    entry_bound: int
    witness: Optional[InequivalenceWitness]
    words: Optional[Exhausted]
    directions: list

    NOTE = ('A bounded search that finds nothing is not a proof that no simulation '
            'or chain of simulations exists.')

    def summary(self):
        lines = [f'outcome: {self.outcome}', f'entry bound: {{0..{self.entry_bound}, inf}}']
        if self.witness:
            lines.append(f'witness: {"".join(self.witness.word)!r} '
                         f'({self.witness.lhs} != {self.witness.rhs})')
        else:
            lines.append(f'no witness: {self.words.detail}')
        for d in self.directions:
            lines.append(f'{d.direction}: {d.status} after {d.candidates} candidates')
        lines.append(self.NOTE)
        return '\n'.join(lines)


def _bounded_direction(P, Q, entries, max_steps, label):
    n = 0
    for X in _simulation_search(P, Q, entries):
        if X is not None:
            return DirectionOutcome(label, 'found', n + 1, X)
        n += 1
        if n >= max_steps:
            return DirectionOutcome(label, 'budget-exhausted', n)
    return DirectionOutcome(label, 'none-within-bound', n)


def tropical_probe(A, B, budget=None, entry_bound=4):
    """Look for a witness, and for a single simulation in either direction.

    Simulation matrices are enumerated with entries in ``{0..entry_bound, inf}``;
    each direction examines at most ``budget.max_steps`` candidates.
    """
    budget = budget or Budget()
    _require_compatible(A, B)
    if A.semiring is not TROPICAL:
        raise UnsupportedSemiring(f'tropical probe needs the tropical semiring, not {A.semiring.name}')
    entries = tuple(range(entry_bound + 1)) + (INF,)
    found = semidecide_inequivalent(A, B, budget)
    witness = found if isinstance(found, InequivalenceWitness) else None
    directions = [
        _bounded_direction(A, B, entries, budget.max_steps, 'A->B'),
        _bounded_direction(B, A, entries, budget.max_steps, 'B->A'),
    ]
    if witness:
        outcome = 'witness'
    elif any(d.status == 'found' for d in directions):
        outcome = 'simulation'
    else:
        outcome = 'neither-within-budget'
    return ProbeReport(outcome, entry_bound, witness, None if witness else found, directions)
