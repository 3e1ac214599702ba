"""Semirings with exact arithmetic.

A :class:`Semiring` bundles the carrier operations together with the
text (de)serialization used by the file formats.  The shipped instances are

    BOOL      ({0, 1}, or, and)
    NAT       (arbitrary precision naturals)
    INT       (arbitrary precision integers)
    RAT       (exact rationals via :class:`fractions.Fraction`)
    TROPICAL  (N u {inf}, min, +) over 64-bit naturals with overflow checks

plus :class:`TableSemiring`, a finite semiring given by its operation tables.
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from wfasim.errors import ParseError, ShapeError


class _Infinity:
    """The tropical zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INF'

    def __str__(self):
        return 'inf'

    def __reduce__(self):
        return (_Infinity, ())

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __hash__(self):
        return hash('tropical-infinity')


INF = _Infinity()

U64_MAX = 2**64 - 1


class Semiring:
    """A semiring given by its operations.

    ``neg`` is present exactly for rings and ``inv`` (defined on nonzero
    elements) exactly for fields.  ``carrier`` is the exhaustive element
    list of a finite semiring and ``None`` otherwise.
    """

    def __init__(self, name, add, mul, zero, one, *, contains, parse, format,
                 sample=None, neg=None, inv=None, carrier=None, commutative=True,
                 coerce=None):
        self.name = name
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.contains = contains
        self.parse = parse
        self.format = format
        self.sample = sample
        self.neg = neg
        self.inv = inv
        self.carrier = None if carrier is None else tuple(carrier)
        self.is_commutative = commutative
        self.coerce = coerce or (lambda x: x)

    def __repr__(self):
        return f'<Semiring {self.name}>'

    @property
    def is_finite(self):
        return self.carrier is not None

    @property
    def is_ring(self):
        return self.neg is not None

    @property
    def is_field(self):
        return self.inv is not None

    @property
    def flags(self):
        return {'is_finite': self.is_finite, 'is_field': self.is_field,
                'is_ring': self.is_ring, 'is_commutative': self.is_commutative}

    def eq(self, x, y):
        return x == y

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def sum(self, xs):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def dot(self, xs, ys):
        total = self.zero
        for x, y in zip(xs, ys):
            total = self.add(total, self.mul(x, y))
        return total

    def elements(self):
        if self.carrier is None:
            raise TypeError(f'{self.name} is infinite')
        return self.carrier


def _parse_int(token):
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f'expected an integer, got {token!r}') from None


def _parse_nat(token):
    x = _parse_int(token)
    if x < 0:
        raise ParseError(f'expected a natural number, got {token!r}')
    return x


def _parse_bool(token):
    if token not in ('0', '1'):
        raise ParseError(f'expected 0 or 1, got {token!r}')
    return int(token)


def _parse_rat(token):
    if token.count('/') > 1 or not token.replace('/', '').lstrip('-').isdigit():
        raise ParseError(f'expected p or p/q, got {token!r}')
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f'zero denominator in {token!r}') from None


def _format_rat(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def _parse_tropical(token):
    if token == 'inf':
        return INF
    x = _parse_nat(token)
    if x > U64_MAX:
        raise ParseError(f'{token} exceeds the 64-bit range')
    return x


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def trop_add(x, y):
    if x is INF:
        return y
    if y is INF:
        return x
    return x if x <= y else y


def trop_mul(x, y):
    if x is INF or y is INF:
        return INF
    s = x + y
    if s > U64_MAX:
        raise OverflowError(f'tropical product {x} + {y} leaves the 64-bit range')
    return s


def _sample_small_int(rng):
    return rng.randint(-5, 5)


BOOL = Semiring(
    'bool', lambda x, y: x | y, lambda x, y: x & y, 0, 1,
    contains=lambda x: x in (0, 1) and not isinstance(x, Fraction),
    parse=_parse_bool, format=str,
    sample=lambda rng: rng.randint(0, 1),
    carrier=(0, 1),
)

NAT = Semiring(
    'nat', lambda x, y: x + y, lambda x, y: x * y, 0, 1,
    contains=lambda x: _is_int(x) and x >= 0,
    parse=_parse_nat, format=str,
    sample=lambda rng: rng.choice((0, 1, rng.randint(0, 9), rng.randint(0, 10**30))),
)

INT = Semiring(
    'int', lambda x, y: x + y, lambda x, y: x * y, 0, 1,
    contains=_is_int,
    parse=_parse_int, format=str,
    sample=lambda rng: rng.choice((0, 1, _sample_small_int(rng), rng.randint(-10**30, 10**30))),
    neg=lambda x: -x,
)

RAT = Semiring(
    'rat', lambda x, y: x + y, lambda x, y: x * y, Fraction(0), Fraction(1),
    contains=lambda x: isinstance(x, Fraction),
    parse=_parse_rat, format=_format_rat,
    sample=lambda rng: Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
    neg=lambda x: -x,
    inv=lambda x: 1 / x,
    coerce=lambda x: Fraction(x) if _is_int(x) else x,
)

TROPICAL = Semiring(
    'tropical', trop_add, trop_mul, INF, 0,
    contains=lambda x: x is INF or (_is_int(x) and 0 <= x <= U64_MAX),
    parse=_parse_tropical, format=str,
    sample=lambda rng: INF if rng.random() < 0.15 else rng.randint(0, 2**20),
)

BUILTIN = {s.name: s for s in (BOOL, NAT, INT, RAT, TROPICAL)}


class TableSemiring(Semiring):
    """A finite semiring given by index tables over a list of labels.

    Construction only checks that the tables are well shaped; use
    :func:`validate_table_semiring` to check the axioms.  Ring/field
    operations are derived from the tables when every element (resp. every
    nonzero element) has an inverse.
    """

    def __init__(self, elements, add_table, mul_table, zero_index, one_index):
        elements = tuple(str(e) for e in elements)
        k = len(elements)
        if k == 0:
            raise ShapeError('table semiring needs at least one element')
        if len(set(elements)) != k:
            raise ShapeError('duplicate element labels')
        for e in elements:
            if not e or any(c.isspace() for c in e) or e.startswith('#'):
                raise ShapeError(f'bad element label {e!r}')
        add_table = _check_table('add', add_table, k)
        mul_table = _check_table('mul', mul_table, k)
        for what, i in (('zero', zero_index), ('one', one_index)):
            if not (_is_int(i) and 0 <= i < k):
                raise ShapeError(f'{what} index {i!r} out of range')

        self.labels = elements
        self.add_table = add_table
        self.mul_table = mul_table
        self.zero_index = zero_index
        self.one_index = one_index
        self.index = {e: i for i, e in enumerate(elements)}

        E, idx = elements, self.index
        super().__init__(
            'table',
            lambda x, y: E[add_table[idx[x]][idx[y]]],
            lambda x, y: E[mul_table[idx[x]][idx[y]]],
            E[zero_index], E[one_index],
            contains=lambda x: x in idx,
            parse=self._parse_label, format=str,
            sample=lambda rng: rng.choice(E),
            carrier=E,
            commutative=all(mul_table[i][j] == mul_table[j][i]
                            for i in range(k) for j in range(k)),
        )
        self.neg, self.inv = self._derive_inverses()

    @classmethod
    def from_labels(cls, elements, add_rows, mul_rows, zero, one):
        elements = tuple(str(e) for e in elements)
        idx = {e: i for i, e in enumerate(elements)}

        def lookup(label):
            if label not in idx:
                raise ShapeError(f'unknown element {label!r} in table')
            return idx[label]

        add_table = [[lookup(str(v)) for v in row] for row in add_rows]
        mul_table = [[lookup(str(v)) for v in row] for row in mul_rows]
        return cls(elements, add_table, mul_table, lookup(str(zero)), lookup(str(one)))

    @classmethod
    def from_functions(cls, elements, add, mul, zero, one):
        """Tabulate Python functions over ``elements`` (used for Z/n and friends)."""
        elements = list(elements)
        pos = {e: i for i, e in enumerate(elements)}
        add_table = [[pos[add(x, y)] for y in elements] for x in elements]
        mul_table = [[pos[mul(x, y)] for y in elements] for x in elements]
        return cls([str(e) for e in elements], add_table, mul_table, pos[zero], pos[one])

    def _parse_label(self, token):
        if token not in self.index:
            raise ParseError(f'{token!r} is not an element of the table semiring')
        return token

    def _derive_inverses(self):
        k = len(self.labels)
        z, o = self.zero_index, self.one_index
        neg = {}
        for i in range(k):
            js = [j for j in range(k) if self.add_table[i][j] == z and self.add_table[j][i] == z]
            if not js:
                return None, None
            neg[self.labels[i]] = self.labels[js[0]]
        neg_fn = neg.__getitem__
        if z == o or not self.is_commutative:
            return neg_fn, None
        inv = {}
        for i in range(k):
            if i == z:
                continue
            js = [j for j in range(k) if self.mul_table[i][j] == o]
            if not js:
                return neg_fn, None
            inv[self.labels[i]] = self.labels[js[0]]
        return neg_fn, inv.__getitem__

    def _key(self):
        return (self.labels, self.add_table, self.mul_table, self.zero_index, self.one_index)

    def __eq__(self, other):
        return isinstance(other, TableSemiring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'<TableSemiring {" ".join(self.labels)}>'


def _check_table(what, table, k):
    try:
        rows = tuple(tuple(row) for row in table)
    except TypeError:
        raise ShapeError(f'{what} table is not a matrix') from None
    if len(rows) != k or any(len(r) != k for r in rows):
        raise ShapeError(f'{what} table must be {k}x{k}')
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if not (_is_int(v) and 0 <= v < k):
                raise ShapeError(f'{what} table entry ({i},{j}) = {v!r} is not a valid index')
    return rows


def boolean_table():
    return TableSemiring.from_functions([0, 1], lambda x, y: x | y, lambda x, y: x & y, 0, 1)


def zmod(n):
    """Z/nZ as a table semiring (a field when n is prime)."""
    return TableSemiring.from_functions(range(n), lambda x, y: (x + y) % n,
                                        lambda x, y: (x * y) % n, 0, 1 % n)


def gf2():
    return zmod(2)


# --- axiom checking ---------------------------------------------------------

AXIOMS = (
    'add_associative', 'add_commutative', 'add_identity',
    'mul_associative', 'mul_identity',
    'left_distributive', 'right_distributive',
    'zero_annihilates', 'nontrivial',
)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f'{self.axiom} fails at ({", ".join(map(str, self.witness))})'


@dataclass
class AxiomReport:
    exhaustive: bool
    checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def axioms(self):
        return [v.axiom for v in self.violations]


def _violations(S, x, y, z):
    add, mul, eq = S.add, S.mul, S.eq
    zero, one = S.zero, S.one
    if not eq(add(add(x, y), z), add(x, add(y, z))):
        yield 'add_associative', (x, y, z)
    if not eq(add(x, y), add(y, x)):
        yield 'add_commutative', (x, y)
    if not (eq(add(zero, x), x) and eq(add(x, zero), x)):
        yield 'add_identity', (x,)
    if not eq(mul(mul(x, y), z), mul(x, mul(y, z))):
        yield 'mul_associative', (x, y, z)
    if not (eq(mul(one, x), x) and eq(mul(x, one), x)):
        yield 'mul_identity', (x,)
    if not eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z))):
        yield 'left_distributive', (x, y, z)
    if not eq(mul(add(x, y), z), add(mul(x, z), mul(y, z))):
        yield 'right_distributive', (x, y, z)
    if not (eq(mul(x, zero), zero) and eq(mul(zero, x), zero)):
        yield 'zero_annihilates', (x,)


def check_axioms(S, samples=10_000, seed=0):
    """Check the semiring laws of ``S``.

    Finite semirings are checked exhaustively over all |S|^3 triples;
    infinite ones on ``samples`` random triples drawn with ``S.sample``.
    The report keeps the first witness found for each violated axiom.
    """
    if S.is_finite:
        triples = itertools.product(S.carrier, repeat=3)
        exhaustive = True
    else:
        rng = random.Random(seed)
        special = [S.zero, S.one]
        triples = (tuple(rng.choice(special) if rng.random() < 0.1 else S.sample(rng)
                         for _ in range(3))
                   for _ in range(samples))
        exhaustive = False
    found = {}
    if S.eq(S.zero, S.one):
        found['nontrivial'] = (S.zero, S.one)
    n = 0
    for x, y, z in triples:
        n += 1
        for axiom, witness in _violations(S, x, y, z):
            found.setdefault(axiom, witness)
    violations = [Violation(a, found[a]) for a in AXIOMS if a in found]
    return AxiomReport(exhaustive, n, violations)


def validate_table_semiring(t):
    """Exhaustively validate a :class:`TableSemiring` (or a raw table spec).

    Shape problems raise :class:`ShapeError`; axiom failures are reported.
    """
    if not isinstance(t, TableSemiring):
        t = TableSemiring(*t)
    return check_axioms(t)
