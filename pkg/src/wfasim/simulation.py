"""Simulations between automata and chains of them.

``X`` is a simulation ``A -> B`` when ``alpha X = gamma``, ``M_a X = X N_a``
for every letter and ``beta = X delta``.  Any such ``X`` forces ``A`` and
``B`` to have the same behavior.
"""

from dataclasses import dataclass
from typing import Optional

from wfasim.errors import AlphabetMismatch, SemiringMismatch, ShapeError, WFAError
from wfasim.matrix import mat_mul, same_semiring
from wfasim.wfa import Automaton

FORWARD = 'forward'
BACKWARD = 'backward'


@dataclass(frozen=True)
class SimulationReport:
    ok: bool
    identity: Optional[str] = None   # 'initial', 'transition' or 'final'
    letter: Optional[str] = None
    index: Optional[tuple] = None    # (row, col) of the first mismatch
    lhs: object = None
    rhs: object = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return 'pass'
        where = f'transition({self.letter})' if self.identity == 'transition' else self.identity
        return f'fail: {where} identity at entry {self.index}: {self.lhs!s} != {self.rhs!s}'


def _first_mismatch(S, P, Q):
    for i in range(P.rows):
        for j in range(P.cols):
            if not S.eq(P[i, j], Q[i, j]):
                return (i, j), P[i, j], Q[i, j]
    return None


def _check_compatible(A, B):
    if not same_semiring(A.semiring, B.semiring):
        raise SemiringMismatch(f'{A.semiring.name} vs {B.semiring.name}')
    if A.alphabet != B.alphabet:
        raise AlphabetMismatch(f'{A.alphabet} vs {B.alphabet}')


def check_simulation(A, B, X):
    """Check that ``X`` is a simulation ``A -> B``.

    Identities are checked in the order initial, transitions (alphabet
    order), final; the report names the first row-major mismatch.
    """
    _check_compatible(A, B)
    if not same_semiring(X.semiring, A.semiring):
        raise SemiringMismatch('simulation matrix over a different semiring')
    if X.shape != (A.dim, B.dim):
        raise ShapeError(f'simulation matrix must be {A.dim}x{B.dim}, got {X.rows}x{X.cols}')
    S = A.semiring
    bad = _first_mismatch(S, mat_mul(A.alpha, X), B.alpha)
    if bad:
        return SimulationReport(False, 'initial', None, *bad)
    for a, Ma, Na in zip(A.alphabet, A.trans, B.trans):
        bad = _first_mismatch(S, mat_mul(Ma, X), mat_mul(X, Na))
        if bad:
            return SimulationReport(False, 'transition', a, *bad)
    bad = _first_mismatch(S, A.beta, mat_mul(X, B.beta))
    if bad:
        return SimulationReport(False, 'final', None, *bad)
    return SimulationReport(True)


@dataclass(frozen=True)
class SimulationCertificate:
    source: Automaton
    target: Automaton
    X: object

    def check(self):
        return check_simulation(self.source, self.target, self.X)


def compose(c1, c2):
    """Compose ``A -X1-> B`` and ``B -X2-> C`` into ``A -X1.X2-> C``."""
    if c1.target != c2.source:
        raise WFAError('cannot compose: middle automata differ')
    return SimulationCertificate(c1.source, c2.target, mat_mul(c1.X, c2.X))


@dataclass(frozen=True)
class Link:
    direction: str   # FORWARD: C_i -> C_{i+1};  BACKWARD: C_{i+1} -> C_i
    X: object

    def __post_init__(self):
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f'link direction must be {FORWARD!r} or {BACKWARD!r}')


@dataclass(frozen=True)
class ChainCertificate:
    automata: tuple
    links: tuple

    def __post_init__(self):
        object.__setattr__(self, 'automata', tuple(self.automata))
        object.__setattr__(self, 'links', tuple(self.links))
        if not self.automata:
            raise ShapeError('a chain needs at least one automaton')
        if len(self.links) != len(self.automata) - 1:
            raise ShapeError('a chain of k+1 automata needs exactly k links')

    def __len__(self):
        return len(self.links)


@dataclass(frozen=True)
class ChainReport:
    ok: bool
    link: Optional[int] = None   # 1-based index of the failing link
    reason: str = ''
    detail: Optional[SimulationReport] = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return 'pass: every link is a simulation, so both endpoints have the same behavior'
        if self.link is None:
            return f'fail: {self.reason}'
        return f'fail at link {self.link}: {self.reason}'


def check_link(P, Q, link):
    if link.direction == FORWARD:
        return check_simulation(P, Q, link.X)
    return check_simulation(Q, P, link.X)


def verify_chain(chain, A, B):
    if chain.automata[0] != A:
        return ChainReport(False, None, 'first automaton is not A')
    if chain.automata[-1] != B:
        return ChainReport(False, None, 'last automaton is not B')
    for i, link in enumerate(chain.links):
        P, Q = chain.automata[i], chain.automata[i + 1]
        try:
            rep = check_link(P, Q, link)
        except (ShapeError, SemiringMismatch, AlphabetMismatch) as e:
            return ChainReport(False, i + 1, f'malformed link: {e}')
        if not rep:
            return ChainReport(False, i + 1, str(rep), rep)
    return ChainReport(True)
