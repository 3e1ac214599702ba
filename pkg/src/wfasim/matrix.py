"""Dense immutable matrices over a :class:`~wfasim.semiring.Semiring`."""

from wfasim.errors import SemiringMismatch, ShapeError


def same_semiring(S, T):
    return S is T or S == T


class Matrix:
    """A ``rows x cols`` matrix of semiring elements, stored row-major.

    Row vectors are ``1 x n`` and column vectors ``n x 1``.  Instances are
    immutable and hashable.
    """

    __slots__ = ('semiring', 'rows', 'cols', '_data')

    def __init__(self, semiring, data, shape=None):
        data = tuple(tuple(semiring.coerce(x) for x in row) for row in data)
        if shape is None:
            if not data:
                raise ShapeError('matrix needs at least one row; pass shape for empty matrices')
            shape = (len(data), len(data[0]))
        rows, cols = shape
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError(f'ragged or mis-sized matrix, expected {rows}x{cols}')
        for i, r in enumerate(data):
            for j, x in enumerate(r):
                if not semiring.contains(x):
                    raise ValueError(f'entry ({i},{j}) = {x!r} is not in {semiring.name}')
        self.semiring = semiring
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def row(cls, semiring, entries):
        return cls(semiring, [list(entries)], (1, len(entries)))

    @classmethod
    def column(cls, semiring, entries):
        return cls(semiring, [[x] for x in entries], (len(entries), 1))

    @classmethod
    def _raw(cls, semiring, data, rows, cols):
        m = object.__new__(cls)
        m.semiring = semiring
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @property
    def shape(self):
        return (self.rows, self.cols)

    def tolist(self):
        return [list(r) for r in self._data]

    def row_tuple(self, i):
        return self._data[i]

    def col_tuple(self, j):
        return tuple(r[j] for r in self._data)

    def entries(self):
        """Row-major flat tuple of entries."""
        return tuple(x for r in self._data for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    @property
    def T(self):
        return Matrix._raw(self.semiring, tuple(zip(*self._data)) if self.rows else (),
                           self.cols, self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and same_semiring(self.semiring, other.semiring)
                and self._data == other._data)

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        fmt = self.semiring.format
        body = '; '.join(' '.join(fmt(x) for x in r) for r in self._data)
        return f'Matrix[{self.semiring.name}]({self.rows}x{self.cols}: {body})'

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def replace(self, i, j, value):
        """Copy with entry ``(i, j)`` set to ``value``."""
        data = [list(r) for r in self._data]
        data[i][j] = value
        return Matrix(self.semiring, data, self.shape)


def _check_same(a, b):
    if not same_semiring(a.semiring, b.semiring):
        raise SemiringMismatch(f'{a.semiring.name} vs {b.semiring.name}')


def mat_mul(a, b):
    _check_same(a, b)
    if a.cols != b.rows:
        raise ShapeError(f'cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}')
    S = a.semiring
    add, mul, zero = S.add, S.mul, S.zero
    bt = tuple(zip(*b._data)) if b.rows else tuple(() for _ in range(b.cols))
    out = []
    for r in a._data:
        out_row = []
        for c in bt:
            acc = zero
            for x, y in zip(r, c):
                acc = add(acc, mul(x, y))
            out_row.append(acc)
        out.append(tuple(out_row))
    return Matrix._raw(S, tuple(out), a.rows, b.cols)


def mat_add(a, b):
    _check_same(a, b)
    if a.shape != b.shape:
        raise ShapeError(f'cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}')
    add = a.semiring.add
    data = tuple(tuple(add(x, y) for x, y in zip(r, s)) for r, s in zip(a._data, b._data))
    return Matrix._raw(a.semiring, data, a.rows, a.cols)


def mat_identity(S, n):
    if n < 1:
        raise ShapeError('identity dimension must be >= 1')
    data = tuple(tuple(S.one if i == j else S.zero for j in range(n)) for i in range(n))
    return Matrix._raw(S, data, n, n)


def mat_zeros(S, rows, cols):
    return Matrix._raw(S, tuple((S.zero,) * cols for _ in range(rows)), rows, cols)


def unit_row(S, n, j):
    return Matrix._raw(S, (tuple(S.one if k == j else S.zero for k in range(n)),), 1, n)


def is_unit_vector(S, entries):
    """Exactly one nonzero entry, and it equals one."""
    nz = [x for x in entries if not S.eq(x, S.zero)]
    return len(nz) == 1 and S.eq(nz[0], S.one)
