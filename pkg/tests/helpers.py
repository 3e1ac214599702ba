"""Random automata and certified pairs for the test suite.

Certified pairs come from state splitting: given an automaton and a
surjection ``h`` from new states onto old ones, the 0/1 matrix of ``h`` (or
its transpose) is a simulation once the weights of each old entry are split
among the preimage states.  This needs only a way to write an element as a
sum of k elements, so it works over every semiring used here.
"""

import itertools
import random
from fractions import Fraction

from wfasim import BOOL, INF, INT, NAT, RAT, TROPICAL, Automaton, Matrix
from wfasim.semiring import TableSemiring


def random_element(S, rng):
    if S is BOOL:
        return rng.randint(0, 1)
    if S is NAT:
        return rng.choice((0, 0, 1, 1, 2, 3))
    if S is INT:
        return rng.choice((0, 0, 1, -1, 2, -2))
    if S is RAT:
        return rng.choice((Fraction(0), Fraction(0), Fraction(1), Fraction(-1),
                           Fraction(rng.randint(-3, 3), rng.randint(1, 3))))
    if S is TROPICAL:
        return rng.choice((INF, INF, 0, 1, 2, 3))
    return rng.choice(S.carrier)


def random_automaton(S, alphabet, dim, rng):
    el = lambda: random_element(S, rng)
    return Automaton.build(
        S, alphabet, [el() for _ in range(dim)],
        {a: [[el() for _ in range(dim)] for _ in range(dim)] for a in alphabet},
        [el() for _ in range(dim)],
    )


def split(S, t, k, rng):
    """k elements whose semiring sum is t."""
    if k == 1:
        return [t]
    if S is TROPICAL:
        if t is INF:
            return [INF] * k
        parts = [rng.choice((INF, t, t + 1, t + 2)) for _ in range(k)]
        parts[rng.randrange(k)] = t
        return parts
    if S is NAT:
        cuts = sorted(rng.randint(0, t) for _ in range(k - 1))
        return [b - a for a, b in zip([0] + cuts, cuts + [t])]
    if S.is_ring and not S.is_finite:
        parts = [random_element(S, rng) for _ in range(k - 1)]
        return parts + [S.sub(t, S.sum(parts))]
    if S.is_finite:
        opts = [p for p in itertools.product(S.carrier, repeat=k) if S.eq(S.sum(p), t)]
        return list(rng.choice(opts))
    raise TypeError(S)


def _surjection(m, n, rng):
    h = list(range(n)) + [rng.randrange(n) for _ in range(m - n)]
    rng.shuffle(h)
    return h


def split_forward(B, m, rng):
    """A of dimension m with a simulation A -X-> B (X rows are unit vectors)."""
    S, n = B.semiring, B.dim
    h = _surjection(m, n, rng)
    pre = [[k for k in range(m) if h[k] == j] for j in range(n)]
    X = Matrix(S, [[S.one if h[i] == j else S.zero for j in range(n)] for i in range(m)])

    def spread(values):
        out = [S.zero] * m
        for j, t in enumerate(values):
            for k, v in zip(pre[j], split(S, t, len(pre[j]), rng)):
                out[k] = v
        return out

    alpha = spread(B.alpha.row_tuple(0))
    beta = [B.beta[h[i], 0] for i in range(m)]
    trans = {a: [spread(N.row_tuple(h[i])) for i in range(m)]
             for a, N in zip(B.alphabet, B.trans)}
    return Automaton.build(S, B.alphabet, alpha, trans, beta), X


def split_backward(A, m, rng):
    """B of dimension m with a simulation A -X-> B (X columns are unit vectors)."""
    S, n = A.semiring, A.dim
    h = _surjection(m, n, rng)
    pre = [[k for k in range(m) if h[k] == i] for i in range(n)]
    X = Matrix(S, [[S.one if h[j] == i else S.zero for j in range(m)] for i in range(n)])
    gamma = [A.alpha[0, h[j]] for j in range(m)]
    delta = [S.zero] * m
    for i in range(n):
        for k, v in zip(pre[i], split(S, A.beta[i, 0], len(pre[i]), rng)):
            delta[k] = v
    trans = {}
    for a, M in zip(A.alphabet, A.trans):
        N = [[S.zero] * m for _ in range(m)]
        for i in range(n):
            for j in range(m):
                for k, v in zip(pre[i], split(S, M[i, h[j]], len(pre[i]), rng)):
                    N[k][j] = v
        trans[a] = N
    return Automaton.build(S, A.alphabet, gamma, trans, delta), X


def change_of_basis(A, rng):
    """Over a field: B = X^-1 A X for a random invertible X, with A -X-> B."""
    S, n = A.semiring, A.dim
    while True:
        X = Matrix(S, [[random_element(S, rng) for _ in range(n)] for _ in range(n)])
        Xinv = _inverse(S, X)
        if Xinv is not None:
            break
    gamma = A.alpha @ X
    trans = tuple(Xinv @ M @ X for M in A.trans)
    delta = Xinv @ A.beta
    return Automaton(S, A.alphabet, gamma, trans, delta), X


def unimodular_change(A, rng, steps=4):
    """Over the integers: B = U^-1 A U for a random unimodular U, with A -U-> B.

    U is a product of elementary row operations, and U^-1 the product of
    their inverses in reverse order.
    """
    S, n = A.semiring, A.dim
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    Uinv = [row[:] for row in U]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        # U <- U E with E = identity + c e_ij: column j += c * column i
        for r in range(n):
            U[r][j] += c * U[r][i]
        # Uinv <- E^-1 Uinv: row i -= c * row j
        Uinv[i] = [x - c * y for x, y in zip(Uinv[i], Uinv[j])]
    X, Xinv = Matrix(S, U), Matrix(S, Uinv)
    trans = tuple(Xinv @ M @ X for M in A.trans)
    return Automaton(S, A.alphabet, A.alpha @ X, trans, Xinv @ A.beta), X


def _inverse(S, X):
    n = X.rows
    aug = [list(X.row_tuple(i)) + [S.one if i == j else S.zero for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not S.eq(aug[r][c], S.zero)), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        f = S.inv(aug[c][c])
        aug[c] = [S.mul(f, x) for x in aug[c]]
        for r in range(n):
            if r != c and not S.eq(aug[r][c], S.zero):
                g = aug[r][c]
                aug[r] = [S.sub(x, S.mul(g, y)) for x, y in zip(aug[r], aug[c])]
    return Matrix(S, [row[n:] for row in aug])


def certified_pair(S, alphabet, rng, max_dim=4):
    """(A, B, X) with X a simulation A -> B, dims <= max_dim."""
    base_dim = rng.randint(1, max(1, max_dim - 1))
    C = random_automaton(S, alphabet, base_dim, rng)
    big = rng.randint(base_dim, max_dim)
    kind = rng.choice(('forward', 'backward', 'basis') if S.is_field or S is INT else ('forward', 'backward'))
    if kind == 'forward':
        A, X = split_forward(C, big, rng)
        return A, C, X
    if kind == 'backward':
        B, X = split_backward(C, big, rng)
        return C, B, X
    B, X = (unimodular_change if S is INT else change_of_basis)(C, rng)
    return C, B, X


def equivalent_pair(S, alphabet, rng, max_dim=3):
    """Two automata with the same behavior, both obtained from a common C."""
    C = random_automaton(S, alphabet, rng.randint(1, max_dim), rng)
    out = []
    for _ in range(2):
        r = rng.random()
        if r < 0.2:
            out.append(C)
        elif r < 0.6 or (S.is_field and r < 0.7):
            out.append(split_forward(C, rng.randint(C.dim, max_dim), rng)[0])
        elif S.is_field and r > 0.85:
            out.append(change_of_basis(C, rng)[0])
        elif S is INT and r > 0.8:
            out.append(unimodular_change(C, rng)[0])
        else:
            out.append(split_backward(C, rng.randint(C.dim, max_dim), rng)[0])
    return tuple(out)


def perturb(A, rng):
    """Change one coefficient of A to a different element."""
    S = A.semiring
    alpha = list(A.alpha.row_tuple(0))
    beta = list(A.beta.col_tuple(0))
    trans = {a: M.tolist() for a, M in zip(A.alphabet, A.trans)}
    n = A.dim
    spot = rng.randrange(2 * n + len(A.alphabet) * n * n)

    def other(x):
        while True:
            y = random_element(S, rng)
            if not S.eq(x, y):
                return y

    if spot < n:
        alpha[spot] = other(alpha[spot])
    elif spot < 2 * n:
        beta[spot - n] = other(beta[spot - n])
    else:
        spot -= 2 * n
        a = A.alphabet[spot // (n * n)]
        i, j = divmod(spot % (n * n), n)
        trans[a][i][j] = other(trans[a][i][j])
    return Automaton.build(S, A.alphabet, alpha, trans, beta)


def first_difference(A, B, max_len):
    """Length-lex first word of length <= max_len where A and B differ, or None.

    Propagates the row vectors alpha M_w of both automata from each word's
    prefix with plain semiring arithmetic, so it shares no code with the
    matrix layer or the joint constructions.
    """
    S = A.semiring

    def step(v, M):
        n = len(v)
        return tuple(S.sum(S.mul(v[i], M[i][j]) for i in range(n)) for j in range(n))

    def coeff(v, beta):
        return S.sum(S.mul(x, b) for x, b in zip(v, beta))

    mats = [[M.tolist() for M in P.trans] for P in (A, B)]
    betas = [P.beta.col_tuple(0) for P in (A, B)]
    level = [((), A.alpha.row_tuple(0), B.alpha.row_tuple(0))]
    for length in range(max_len + 1):
        for w, u, v in level:
            if not S.eq(coeff(u, betas[0]), coeff(v, betas[1])):
                return w
        if length < max_len:
            level = [(w + (a,), step(u, mats[0][k]), step(v, mats[1][k]))
                     for w, u, v in level for k, a in enumerate(A.alphabet)]
    return None


def agree_upto(A, B, max_len):
    return first_difference(A, B, max_len) is None


def path_sum(A, w):
    """Coefficient of w as a sum over state paths; independent of the matrix code."""
    S = A.semiring
    n = A.dim
    total = S.zero
    for path in itertools.product(range(n), repeat=len(w) + 1):
        x = A.alpha[0, path[0]]
        for k, a in enumerate(w):
            x = S.mul(x, A.letter_matrix(a)[path[k], path[k + 1]])
        x = S.mul(x, A.beta[path[-1], 0])
        total = S.add(total, x)
    return total


def rng_for(*key):
    return random.Random(repr(key))


def is_table(S):
    return isinstance(S, TableSemiring)
