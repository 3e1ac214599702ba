"""Weighted finite automata and their behaviors.

An automaton of dimension ``n`` is stored as an initial row vector, one
``n x n`` transition matrix per letter, and a final column vector.  The
coefficient of a word ``w`` is ``alpha . M_w . beta`` where ``M_w`` is the
left-to-right product of the letter matrices (identity for the empty word).
"""

import itertools
from dataclasses import dataclass

from wfasim.errors import AlphabetMismatch, SemiringMismatch, ShapeError
from wfasim.matrix import Matrix, is_unit_vector, mat_identity, mat_mul, same_semiring


@dataclass(frozen=True, eq=False)
class Automaton:
    semiring: object
    alphabet: tuple
    alpha: Matrix
    trans: tuple  # one n x n Matrix per letter, in alphabet order
    beta: Matrix

    def __post_init__(self):
        S = self.semiring
        object.__setattr__(self, 'alphabet', tuple(self.alphabet))
        if isinstance(self.trans, dict):
            missing = set(self.alphabet) ^ set(self.trans)
            if missing:
                raise AlphabetMismatch(f'transition letters differ from alphabet: {sorted(missing)}')
            object.__setattr__(self, 'trans', tuple(self.trans[a] for a in self.alphabet))
        else:
            object.__setattr__(self, 'trans', tuple(self.trans))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AlphabetMismatch('alphabet letters must be distinct')
        n = self.alpha.cols
        if n < 1 or self.alpha.rows != 1:
            raise ShapeError(f'alpha must be 1 x n with n >= 1, got {self.alpha.shape}')
        if self.beta.shape != (n, 1):
            raise ShapeError(f'beta must be {n} x 1, got {self.beta.shape}')
        if len(self.trans) != len(self.alphabet):
            raise AlphabetMismatch('need exactly one transition matrix per letter')
        for a, m in zip(self.alphabet, self.trans):
            if m.shape != (n, n):
                raise ShapeError(f'M_{a} must be {n} x {n}, got {m.shape}')
        for m in (self.alpha, self.beta, *self.trans):
            if not same_semiring(m.semiring, S):
                raise SemiringMismatch('all components must share the automaton semiring')

    @classmethod
    def build(cls, semiring, alphabet, alpha, trans, beta):
        """Build from plain nested lists; ``trans`` maps letter -> rows."""
        alphabet = tuple(alphabet)
        n = len(alpha)
        return cls(
            semiring, alphabet,
            Matrix.row(semiring, alpha),
            {a: Matrix(semiring, trans[a], (n, n)) for a in alphabet},
            Matrix.column(semiring, beta),
        )

    @property
    def dim(self):
        return self.alpha.cols

    def letter_matrix(self, a):
        try:
            return self.trans[self.alphabet.index(a)]
        except ValueError:
            raise AlphabetMismatch(f'letter {a!r} not in alphabet {self.alphabet}') from None

    def as_word(self, w):
        """Normalize ``w`` to a tuple of letters.

        Strings containing whitespace are split on it; otherwise they are
        split into characters when every letter is a single character.
        """
        if isinstance(w, str):
            if not any(c.isspace() for c in w) and all(len(a) == 1 for a in self.alphabet):
                w = tuple(w)
            else:
                w = tuple(w.split())
        w = tuple(w)
        for a in w:
            if a not in self.alphabet:
                raise AlphabetMismatch(f'letter {a!r} not in alphabet {self.alphabet}')
        return w

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return (same_semiring(self.semiring, other.semiring) and self.alphabet == other.alphabet
                and self.alpha == other.alpha and self.trans == other.trans
                and self.beta == other.beta)

    def __hash__(self):
        return hash((self.alphabet, self.alpha, self.trans, self.beta))

    def __call__(self, w):
        return behavior_coeff(self, w)


def word_matrix(A, w):
    M = mat_identity(A.semiring, A.dim)
    for a in A.as_word(w):
        M = mat_mul(M, A.letter_matrix(a))
    return M


def behavior_coeff(A, w):
    v = A.alpha
    for a in A.as_word(w):
        v = mat_mul(v, A.letter_matrix(a))
    return mat_mul(v, A.beta)[0, 0]


def words(alphabet, max_len):
    """All words of length <= max_len in length-lexicographic order."""
    for k in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=k)


def enumerate_coeffs(A, max_len):
    """Yield ``(word, coefficient)`` for |word| <= max_len, length-lex.

    Each step costs one vector-matrix product: the row vectors
    ``alpha . M_u`` of the previous length are kept and extended.
    """
    if max_len < 0:
        return
    level = [((), A.alpha)]
    yield (), mat_mul(A.alpha, A.beta)[0, 0]
    for _ in range(max_len):
        nxt = []
        for u, v in level:
            for a, m in zip(A.alphabet, A.trans):
                va = mat_mul(v, m)
                nxt.append((u + (a,), va))
        for w, v in nxt:
            yield w, mat_mul(v, A.beta)[0, 0]
        level = nxt


def is_deterministic(A):
    S = A.semiring
    if not is_unit_vector(S, A.alpha.row_tuple(0)):
        return False
    return all(is_unit_vector(S, row) for m in A.trans for row in m)


def word_str(w):
    """Display form of a word: letters joined (space separated if multi-char), '' for the empty word."""
    if all(len(a) == 1 for a in w):
        return ''.join(w)
    return ' '.join(w)
