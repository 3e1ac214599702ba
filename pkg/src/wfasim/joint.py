"""Joint automata: build ``C`` with simulations ``C -X-> A`` and ``C -Y-> B``.

All three procedures explore the pairs ``(alpha M_w, gamma N_w)`` breadth
first (words in length-lex order) until the set, span or Z-module they
generate stops growing.  The states of ``C`` are generators ``(x_i, y_i)``
of that object; ``X`` stacks the ``x_i`` and ``Y`` the ``y_i``.  The
transition row of state ``i`` under ``a`` expresses ``(x_i M_a, y_i N_a)``
over the generators and ``kappa`` expresses ``(alpha, gamma)``.

If some reached pair has ``x . beta != y . delta`` the automata differ on the
word that reached it, and an :class:`InequivalenceWitness` is returned
instead.

    finite    any finite semiring; the reached set itself, C deterministic
    field     fields (rationals, prime-order tables); a linearly independent span basis
    integer   the integers; a Hermite normal form basis of the Z-module
"""

from dataclasses import dataclass, field

from wfasim.errors import AlphabetMismatch, SemiringMismatch, UnsupportedSemiring
from wfasim.linalg import SpanBasis, ZModule
from wfasim.matrix import Matrix, mat_mul, same_semiring
from wfasim.semiring import INT
from wfasim.simulation import BACKWARD, FORWARD, ChainCertificate, Link
from wfasim.wfa import Automaton, behavior_coeff

MODES = {
    'finite': 'finite semirings (table semirings, bool)',
    'field': 'fields (rat, prime-order tables)',
    'integer': 'the integers (int)',
}


@dataclass(frozen=True)
class InequivalenceWitness:
    word: tuple
    lhs: object
    rhs: object


@dataclass
class JointResult:
    C: Automaton
    X: Matrix
    Y: Matrix
    generators: list      # the (x_i, y_i) pairs, one per state of C
    mode: str
    iterations: int       # length of the longest word needed before the closure stabilized
    words: list = field(default_factory=list)  # word that produced each generator, None if not a reached pair

    @property
    def dim(self):
        return self.C.dim

    @property
    def kappa(self):
        return self.C.alpha

    @property
    def lam(self):
        return self.C.beta

    def R(self, a):
        return self.C.letter_matrix(a)


@dataclass(frozen=True)
class CapExhausted:
    iterations: int
    rank: int


def _require_compatible(A, B):
    if not same_semiring(A.semiring, B.semiring):
        raise SemiringMismatch(f'{A.semiring.name} vs {B.semiring.name}')
    if A.alphabet != B.alphabet:
        raise AlphabetMismatch(f'{A.alphabet} vs {B.alphabet}')


def _unsupported(S, mode):
    supported = '; '.join(f'{k}: {v}' for k, v in MODES.items())
    return UnsupportedSemiring(
        f'{mode} joint construction does not apply to {S.name}. Supported modes: {supported}')


def _vecmat(S, v, M):
    """Row vector (tuple) times Matrix."""
    return tuple(S.dot(v, M.col_tuple(j)) for j in range(M.cols))


class _Pairs:
    """Concatenated pair vectors ``(x | y)`` of A and B."""

    def __init__(self, A, B):
        _require_compatible(A, B)
        self.A, self.B = A, B
        self.S = A.semiring
        self.m, self.n = A.dim, B.dim
        self.start = A.alpha.row_tuple(0) + B.alpha.row_tuple(0)
        self.beta = A.beta.col_tuple(0)
        self.delta = B.beta.col_tuple(0)
        self._mats = list(zip(A.trans, B.trans))

    def succ(self, v, k):
        Ma, Na = self._mats[k]
        return _vecmat(self.S, v[:self.m], Ma) + _vecmat(self.S, v[self.m:], Na)

    def sides(self, v):
        return self.S.dot(v[:self.m], self.beta), self.S.dot(v[self.m:], self.delta)

    def witness(self, v, word):
        lhs, rhs = self.sides(v)
        if not self.S.eq(lhs, rhs):
            return InequivalenceWitness(tuple(word), lhs, rhs)
        return None

    def assemble(self, gens, kappa, R, mode, iterations, words):
        S, A, m = self.S, self.A, self.m
        p = len(gens)
        X = Matrix(S, [g[:m] for g in gens], (p, m))
        Y = Matrix(S, [g[m:] for g in gens], (p, self.n))
        lam = [self.sides(g)[0] for g in gens]
        C = Automaton(
            S, A.alphabet, Matrix.row(S, kappa),
            tuple(Matrix(S, R[k], (p, p)) for k in range(len(A.alphabet))),
            Matrix.column(S, lam),
        )
        if mat_mul(X, A.beta) != mat_mul(Y, self.B.beta):
            raise AssertionError('generators are inconsistent although no witness was found')
        return JointResult(C, X, Y, [(g[:m], g[m:]) for g in gens], mode, iterations, words)

    def degenerate(self, mode):
        # (alpha, gamma) = 0: a one-state zero automaton simulates into both.
        S = self.S
        z = (S.zero,) * (self.m + self.n)
        R = [[[S.zero]] for _ in self.A.alphabet]
        return self.assemble([z], [S.zero], R, mode, 0, [None])


def joint_finite(A, B):
    """Joint construction over a finite semiring; the returned ``C`` is deterministic.

    The states of ``C`` are all reachable pairs ``(alpha M_w, gamma N_w)``,
    with ``(alpha, gamma)`` first.  When the automata differ, the returned
    witness is the length-lex least word on which they differ.
    """
    ctx = _Pairs(A, B)
    S = ctx.S
    if not S.is_finite:
        raise _unsupported(S, 'finite')
    K = len(A.alphabet)
    index = {ctx.start: 0}
    vecs = [ctx.start]
    words = [()]
    succ = []
    w = ctx.witness(ctx.start, ())
    if w:
        return w
    i = 0
    while i < len(vecs):
        row = []
        for k in range(K):
            v = ctx.succ(vecs[i], k)
            j = index.get(v)
            if j is None:
                j = index[v] = len(vecs)
                vecs.append(v)
                words.append(words[i] + (A.alphabet[k],))
                w = ctx.witness(v, words[j])
                if w:
                    return w
            row.append(j)
        succ.append(row)
        i += 1
    p = len(vecs)
    unit = [[S.one if c == j else S.zero for c in range(p)] for j in range(p)]
    R = [[unit[succ[i][k]] for i in range(p)] for k in range(K)]
    kappa = unit[0]
    return ctx.assemble(vecs, kappa, R, 'finite', max(len(u) for u in words), words)


def joint_field(A, B):
    """Joint construction over a field via an exact span basis.

    ``C`` has at most ``m + n`` states, one per linearly independent reached pair.
    """
    ctx = _Pairs(A, B)
    S = ctx.S
    if not S.is_field:
        raise _unsupported(S, 'field')
    K = len(A.alphabet)
    basis = SpanBasis(S, ctx.m + ctx.n)
    if not basis.add(ctx.start):
        return ctx.degenerate('field')
    words = [()]
    w = ctx.witness(ctx.start, ())
    if w:
        return w
    i = 0
    while i < len(basis.gens):
        for k in range(K):
            v = ctx.succ(basis.gens[i], k)
            if basis.add(v):
                words.append(words[i] + (A.alphabet[k],))
                w = ctx.witness(v, words[-1])
                if w:
                    return w
        i += 1
    gens = list(basis.gens)
    R = [[basis.coords(ctx.succ(g, k)) for g in gens] for k in range(K)]
    kappa = basis.coords(ctx.start)
    return ctx.assemble(gens, kappa, R, 'field', max(len(u) for u in words), words)


def joint_integers(A, B, cap=64):
    """Joint construction over the integers via Hermite normal form bases.

    Reached pairs are added while they leave the current Z-module; words of
    length up to ``cap`` are explored.  The states of ``C`` are the HNF basis
    rows of the stabilized module, so the coefficients in ``kappa`` and every
    ``R_a`` row are unique.  Returns :class:`CapExhausted` if the module is
    still growing at length ``cap``.
    """
    ctx = _Pairs(A, B)
    S = ctx.S
    if S is not INT:
        raise _unsupported(S, 'integer')
    if cap < 1:
        raise ValueError('cap must be >= 1')
    K = len(A.alphabet)
    module = ZModule(ctx.m + ctx.n)
    if not module.add(ctx.start):
        return ctx.degenerate('integer')
    reached = [ctx.start]
    words = [()]
    w = ctx.witness(ctx.start, ())
    if w:
        return w
    i = 0
    while i < len(reached):
        for k in range(K):
            v = ctx.succ(reached[i], k)
            if v in module:
                continue
            if len(words[i]) + 1 > cap:
                return CapExhausted(cap, module.rank)
            module.add(v)
            reached.append(v)
            words.append(words[i] + (A.alphabet[k],))
            w = ctx.witness(v, words[-1])
            if w:
                return w
        i += 1
    gens = list(module.basis)
    R = [[module.coords(ctx.succ(g, k)) for g in gens] for k in range(K)]
    kappa = module.coords(ctx.start)
    index = {g: u for g, u in zip(reached, words)}
    return ctx.assemble(gens, kappa, R, 'integer', max(len(u) for u in words),
                        [index.get(g) for g in gens])


def joint(A, B, cap=64):
    """Dispatch to the joint construction matching the semiring."""
    S = A.semiring
    if S.is_finite:
        return joint_finite(A, B)
    if S.is_field:
        return joint_field(A, B)
    if S is INT:
        return joint_integers(A, B, cap)
    raise _unsupported(S, 'any')


def emit_chain(j, A, B):
    """The chain ``A <-X- C -Y-> B``."""
    return ChainCertificate((A, j.C, B), (Link(BACKWARD, j.X), Link(FORWARD, j.Y)))


def recheck_witness(w, A, B):
    S = A.semiring
    lhs, rhs = behavior_coeff(A, w.word), behavior_coeff(B, w.word)
    return S.eq(lhs, w.lhs) and S.eq(rhs, w.rhs) and not S.eq(lhs, rhs)
