"""Exact linear algebra for the joint construction.

:class:`SpanBasis` keeps a linearly independent list of row vectors over a
field together with a reduced row echelon form of their span, so that
membership and coordinates of a new vector cost one elimination pass.

:class:`ZModule` does the same for submodules of Z^k, keeping a row-style
Hermite normal form basis.
"""


class SpanBasis:
    """Incremental span of row vectors over a field semiring ``S``.

    ``gens`` holds the vectors in insertion order.  Each echelon row is kept
    fully reduced (zero in every other row's pivot column, pivot equal to one)
    together with its expression as a combination of ``gens``.
    """

    def __init__(self, S, width):
        if not S.is_field:
            raise TypeError(f'{S.name} is not a field')
        self.S = S
        self.width = width
        self.gens = []
        self._rows = []    # (pivot column, echelon row, combination over gens)

    def __len__(self):
        return len(self.gens)

    def _reduce(self, v):
        S = self.S
        res = list(v)
        comb = [S.zero] * len(self.gens)
        for piv, row, t in self._rows:
            f = res[piv]
            if S.eq(f, S.zero):
                continue
            res = [S.sub(x, S.mul(f, y)) for x, y in zip(res, row)]
            comb = [S.add(c, S.mul(f, s)) for c, s in zip(comb, t)]
        return res, comb

    def coords(self, v):
        """Coefficients ``c`` with ``v = sum c_j gens[j]``, or ``None`` if ``v`` is outside the span."""
        res, comb = self._reduce(v)
        if any(not self.S.eq(x, self.S.zero) for x in res):
            return None
        return comb

    def __contains__(self, v):
        return self.coords(v) is not None

    def add(self, v):
        """Insert ``v`` if it is outside the span.  Returns True when inserted."""
        S = self.S
        v = tuple(v)
        if len(v) != self.width:
            raise ValueError(f'expected a vector of length {self.width}')
        res, comb = self._reduce(v)
        piv = next((j for j, x in enumerate(res) if not S.eq(x, S.zero)), None)
        if piv is None:
            return False
        p = len(self.gens)
        self.gens.append(v)
        f_inv = S.inv(res[piv])
        row = [S.mul(f_inv, x) for x in res]
        # res = v - sum comb_j gens_j, so row = f^-1 (e_p - comb) over gens
        t = [S.mul(f_inv, S.neg(c)) for c in comb] + [f_inv]
        new_rows = []
        for q, r, s in self._rows:
            g = r[piv]
            if not S.eq(g, S.zero):
                r = [S.sub(x, S.mul(g, y)) for x, y in zip(r, row)]
                s = [S.sub(x, S.mul(g, y)) for x, y in zip(s + [S.zero], t)]
            else:
                s = s + [S.zero]
            new_rows.append((q, r, s))
        new_rows.append((piv, row, t))
        new_rows.sort(key=lambda e: e[0])
        self._rows = new_rows
        assert len(self._rows) == p + 1
        return True

    @property
    def rank(self):
        return len(self.gens)


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(rows, width=None):
    """Row-style Hermite normal form of the Z-span of ``rows``.

    Returns the nonzero rows: echelon form with positive pivots and every
    entry above a pivot reduced into ``[0, pivot)``.
    """
    A = [list(r) for r in rows if any(r)]
    if width is None:
        width = len(A[0]) if A else 0
    r = 0
    for col in range(width):
        if r == len(A):
            break
        nz = [i for i in range(r, len(A)) if A[i][col] != 0]
        if not nz:
            continue
        A[r], A[nz[0]] = A[nz[0]], A[r]
        for i in nz[1:]:
            a, b = A[r][col], A[i][col]
            if b == 0:
                continue
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            top = [x * u + y * v for u, v in zip(A[r], A[i])]
            bot = [-bg * u + ag * v for u, v in zip(A[r], A[i])]
            A[r], A[i] = top, bot
        if A[r][col] < 0:
            A[r] = [-u for u in A[r]]
        p = A[r][col]
        for i in range(r):
            q = A[i][col] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
    return [tuple(row) for row in A[:r]]


def _pivot(row):
    return next(j for j, x in enumerate(row) if x != 0)


class ZModule:
    """A submodule of Z^width kept as a Hermite normal form basis."""

    def __init__(self, width):
        self.width = width
        self.basis = []

    @property
    def rank(self):
        return len(self.basis)

    def coords(self, v):
        """Unique coefficients of ``v`` over the basis rows, or ``None`` if ``v`` is not in the module."""
        res = list(v)
        c = []
        for row in self.basis:
            p = _pivot(row)
            q, rem = divmod(res[p], row[p])
            if rem:
                return None
            c.append(q)
            if q:
                res = [x - q * y for x, y in zip(res, row)]
        if any(res):
            return None
        return c

    def __contains__(self, v):
        return self.coords(v) is not None

    def add(self, v):
        v = tuple(v)
        if len(v) != self.width:
            raise ValueError(f'expected a vector of length {self.width}')
        if v in self:
            return False
        self.basis = hnf(self.basis + [v], self.width)
        return True
