import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import hermite_normal_form

from wfasim import RAT, gf2
from wfasim.linalg import SpanBasis, ZModule, hnf, xgcd


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == sympy.gcd(a, b) and x * a + y * b == g


def _int_coords(basis_rows, v):
    """Exact rational coordinates of v over independent rows (sympy), or None."""
    M = sympy.Matrix(basis_rows).T
    try:
        sol, params = M.gauss_jordan_solve(sympy.Matrix(v))
    except ValueError:
        return None
    assert params.shape[0] == 0
    return list(sol)


def _same_lattice(P, Q):
    for X, Y in ((P, Q), (Q, P)):
        for v in X:
            c = _int_coords(Y, v)
            if c is None or any(not x.is_integer for x in c):
                return False
    return True


def _is_hnf(H):
    pivots = []
    for row in H:
        p = next(j for j, x in enumerate(row) if x)
        assert row[p] > 0
        pivots.append(p)
    assert pivots == sorted(set(pivots))
    for k, p in enumerate(pivots):
        for i in range(k):
            assert 0 <= H[i][p] < H[k][p]


int_rows = st.integers(1, 5).flatmap(lambda w: st.lists(
    st.lists(st.integers(-9, 9), min_size=w, max_size=w), min_size=1, max_size=5))


@settings(max_examples=150, deadline=None)
@given(int_rows)
def test_hnf_against_sympy(rows):
    width = len(rows[0])
    H = hnf(rows, width)
    assert len(H) == sympy.Matrix(rows).rank()
    if not H:
        return
    _is_hnf(H)
    ref = hermite_normal_form(sympy.Matrix(rows).T).T.tolist()
    assert _same_lattice([list(r) for r in H], ref)


def test_hnf_is_canonical():
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    H1 = hnf(rows)
    H2 = hnf([rows[2], rows[0], [a + b for a, b in zip(rows[0], rows[1])], rows[1]])
    assert H1 == H2
    _is_hnf(H1)


def test_zmodule_membership_and_coords():
    rng = random.Random(2)
    for _ in range(200):
        w = rng.randint(1, 4)
        M = ZModule(w)
        gens = []
        for _ in range(rng.randint(1, 4)):
            v = tuple(rng.randint(-5, 5) for _ in range(w))
            M.add(v)
            gens.append(v)
        for _ in range(10):
            c = [rng.randint(-3, 3) for _ in gens]
            v = tuple(sum(ci * g[j] for ci, g in zip(c, gens)) for j in range(w))
            coords = M.coords(v)
            assert coords is not None
            back = tuple(sum(ci * b[j] for ci, b in zip(coords, M.basis)) for j in range(w))
            assert back == v


def test_zmodule_index_growth():
    M = ZModule(1)
    assert M.add((4,))
    assert (2,) not in M
    assert M.add((6,))
    assert M.basis == [(2,)]
    assert not M.add((10,))
    assert M.coords((10,)) == [5]


def test_span_basis_rational_against_sympy():
    rng = random.Random(9)
    for _ in range(200):
        w = rng.randint(1, 5)
        B = SpanBasis(RAT, w)
        rows = []
        for _ in range(rng.randint(1, 6)):
            v = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.7 else Fraction(0)
                      for _ in range(w))
            rows.append(v)
            before = sympy.Matrix([list(g) for g in B.gens]).rank() if B.gens else 0
            after = sympy.Matrix([list(g) for g in B.gens] + [list(v)]).rank()
            assert B.add(v) == (after > before)
        assert B.rank == sympy.Matrix(rows).rank()
        for v in rows:
            c = B.coords(v)
            assert c is not None
            assert tuple(sum(ci * g[j] for ci, g in zip(c, B.gens)) for j in range(w)) == v


def test_span_basis_gf2_against_enumeration():
    F = gf2()
    rng = random.Random(4)
    for _ in range(100):
        w = rng.randint(1, 4)
        B = SpanBasis(F, w)
        for _ in range(rng.randint(1, 5)):
            B.add(tuple(rng.choice('01') for _ in range(w)))
        span = {tuple(F.sum(F.mul(c, g[j]) for c, g in zip(cs, B.gens)) for j in range(w))
                for cs in itertools.product('01', repeat=len(B.gens))}
        assert len(span) == 2 ** B.rank
        for v in itertools.product('01', repeat=w):
            assert (v in B) == (v in span)


def test_span_basis_needs_field():
    from wfasim import INT
    with pytest.raises(TypeError):
        SpanBasis(INT, 2)
