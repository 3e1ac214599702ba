"""Plain-text file formats.

Semiring table (``.table``)::

    elements: 0 1
    zero: 0
    one: 1
    add:
    0 1
    1 1
    mul:
    0 0
    0 1

Automaton (``.wfa``)::

    semiring: nat            # bool | nat | int | rat | tropical | table <path>
    alphabet: a b
    dim: 2
    alpha: 1 0
    M a:
    0 1
    0 0
    M b:
    0 0
    0 1
    beta: 0 1

Simulation certificate (``.sim``)::

    source: A.wfa
    target: B.wfa
    X:
    1
    1

Chain (``.chain``)::

    automata: A.wfa C.wfa B.wfa
    link 1 backward:
    <rows>
    link 2 forward:
    <rows>

Tokens are whitespace separated and ``#`` starts a comment.  Paths are
relative to the directory of the file that mentions them.  Elements are
written as decimal integers, ``p/q`` rationals, ``inf`` for the tropical
zero and verbatim labels for table semirings, so every file round-trips
exactly.
"""

import os
import re

from wfasim.errors import ParseError, ShapeError
from wfasim.matrix import Matrix
from wfasim.semiring import BUILTIN, TableSemiring, validate_table_semiring
from wfasim.simulation import BACKWARD, FORWARD, ChainCertificate, Link, SimulationCertificate
from wfasim.wfa import Automaton

_TOKEN = re.compile(r'\S+')


class _Reader:
    """Line cursor over the non-blank, comment-stripped lines of a file."""

    def __init__(self, text, path=None):
        self.path = path
        self.lines = []
        for no, raw in enumerate(text.splitlines(), 1):
            raw = raw.split('#', 1)[0]
            toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(raw)]
            if toks:
                self.lines.append((no, toks))
        self.pos = 0

    def error(self, msg, line=None, col=None):
        if line is None:
            line = self.lines[self.pos][0] if self.pos < len(self.lines) else None
        return ParseError(msg, self.path, line, col)

    def at_end(self):
        return self.pos >= len(self.lines)

    def header(self, key):
        """Consume a ``key:`` line and return its trailing tokens as (col, token)."""
        if self.at_end():
            raise self.error(f'unexpected end of file, expected "{key}:"')
        no, toks = self.lines[self.pos]
        if toks[0][1] != f'{key}:':
            raise self.error(f'expected "{key}:"', no, toks[0][0])
        self.pos += 1
        return toks[1:]

    def peek_words(self):
        if self.at_end():
            return None
        return [t for _, t in self.lines[self.pos][1]]

    def row(self, width):
        if self.at_end():
            raise self.error(f'unexpected end of file, expected a row of {width} entries')
        no, toks = self.lines[self.pos]
        if len(toks) != width:
            raise self.error(f'expected {width} entries, found {len(toks)}', no, toks[0][0])
        self.pos += 1
        return no, toks

    def finish(self):
        if not self.at_end():
            no, toks = self.lines[self.pos]
            raise self.error(f'unexpected content {toks[0][1]!r}', no, toks[0][0])


def _elements(reader, S, toks, line):
    out = []
    for col, tok in toks:
        try:
            out.append(S.parse(tok))
        except ParseError as e:
            raise ParseError(e.msg, reader.path, line, col) from None
    return out


def _read_matrix(reader, S, rows, cols):
    data = []
    for _ in range(rows):
        no, toks = reader.row(cols)
        data.append(_elements(reader, S, toks, no))
    return Matrix(S, data, (rows, cols))


def _format_matrix(M):
    fmt = M.semiring.format
    return [' '.join(fmt(x) for x in row) for row in M]


def _read_text(path):
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise ParseError(f'cannot read file: {e.strerror}', path) from None


def _resolve(base_dir, rel):
    return rel if os.path.isabs(rel) else os.path.normpath(os.path.join(base_dir, rel))


def _relpath(target, from_dir):
    return os.path.relpath(target, from_dir or '.')


# --- semiring tables -------------------------------------------------------------

def parse_table(text, path=None):
    r = _Reader(text, path)
    elems = [t for _, t in r.header('elements')]
    if not elems:
        raise r.error('no elements listed')
    idx = {e: i for i, e in enumerate(elems)}
    if len(idx) != len(elems):
        raise r.error('duplicate element labels')

    def label(toks, what):
        if len(toks) != 1:
            raise r.error(f'{what}: expects exactly one element')
        col, tok = toks[0]
        if tok not in idx:
            raise ParseError(f'{tok!r} is not a listed element', path, r.lines[r.pos - 1][0], col)
        return idx[tok]

    zero = label(r.header('zero'), 'zero')
    one = label(r.header('one'), 'one')
    tables = []
    for name in ('add', 'mul'):
        if r.header(name):
            raise r.error(f'{name}: rows go on the following lines')
        tab = []
        for _ in elems:
            no, toks = r.row(len(elems))
            row = []
            for col, tok in toks:
                if tok not in idx:
                    raise ParseError(f'{tok!r} is not a listed element', path, no, col)
                row.append(idx[tok])
            tab.append(row)
        tables.append(tab)
    r.finish()
    try:
        t = TableSemiring(elems, tables[0], tables[1], zero, one)
    except ShapeError as e:
        raise ParseError(str(e), path) from None
    t.path = os.path.abspath(path) if path else None
    return t


def format_table(t):
    L = t.labels
    lines = [f'elements: {" ".join(L)}', f'zero: {L[t.zero_index]}', f'one: {L[t.one_index]}']
    for name, tab in (('add', t.add_table), ('mul', t.mul_table)):
        lines.append(f'{name}:')
        lines.extend(' '.join(L[j] for j in row) for row in tab)
    return '\n'.join(lines) + '\n'


def load_table(path):
    return parse_table(_read_text(path), path)


def save_table(t, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_table(t))
    t.path = os.path.abspath(path)


# --- automata -----------------------------------------------------------------

def parse_automaton(text, path=None, validate_tables=True):
    r = _Reader(text, path)
    base = os.path.dirname(path) if path else '.'
    toks = r.header('semiring')
    if not toks:
        raise r.error('semiring: missing name')
    line = r.lines[r.pos - 1][0]
    name = toks[0][1]
    if name == 'table':
        if len(toks) != 2:
            raise ParseError('expected "semiring: table <path>"', path, line, toks[0][0])
        S = load_table(_resolve(base, toks[1][1]))
        if validate_tables:
            rep = validate_table_semiring(S)
            if not rep:
                raise ParseError(f'table is not a semiring: {rep.violations[0]}', path, line, toks[1][0])
    elif name in BUILTIN and len(toks) == 1:
        S = BUILTIN[name]
    else:
        raise ParseError(f'unknown semiring {" ".join(t for _, t in toks)!r}', path, line, toks[0][0])

    alphabet = [t for _, t in r.header('alphabet')]
    if not alphabet:
        raise r.error('alphabet must not be empty')
    if len(set(alphabet)) != len(alphabet):
        raise r.error('alphabet letters must be distinct')
    toks = r.header('dim')
    if len(toks) != 1 or not toks[0][1].isdigit() or int(toks[0][1]) < 1:
        raise r.error('dim: expects a positive integer', r.lines[r.pos - 1][0])
    n = int(toks[0][1])
    toks = r.header('alpha')
    line = r.lines[r.pos - 1][0]
    if len(toks) != n:
        raise ParseError(f'alpha: expected {n} entries, found {len(toks)}', path, line)
    alpha = _elements(r, S, toks, line)
    trans = {}
    while r.peek_words() and r.peek_words()[0] == 'M':
        words = r.peek_words()
        no, htoks = r.lines[r.pos]
        if len(words) != 2 or not words[1].endswith(':'):
            raise ParseError('expected "M <letter>:"', path, no, htoks[0][0])
        a = words[1][:-1]
        if a not in alphabet:
            raise ParseError(f'letter {a!r} is not in the alphabet', path, no, htoks[1][0])
        if a in trans:
            raise ParseError(f'duplicate matrix for letter {a!r}', path, no, htoks[1][0])
        r.pos += 1
        trans[a] = _read_matrix(r, S, n, n)
    missing = [a for a in alphabet if a not in trans]
    if missing:
        raise r.error(f'missing transition matrix for letter(s) {" ".join(missing)}')
    toks = r.header('beta')
    line = r.lines[r.pos - 1][0]
    if len(toks) != n:
        raise ParseError(f'beta: expected {n} entries, found {len(toks)}', path, line)
    beta = _elements(r, S, toks, line)
    r.finish()
    return Automaton(S, alphabet, Matrix.row(S, alpha), trans, Matrix.column(S, beta))


def format_automaton(A, path=None, table_path=None):
    """Text of an automaton file; ``path`` is where it will live (for relative table paths)."""
    S = A.semiring
    if isinstance(S, TableSemiring):
        tp = table_path or getattr(S, 'path', None)
        if tp is None:
            raise ValueError('automaton over a table semiring needs a table file path')
        sem = f'table {_relpath(tp, os.path.dirname(os.path.abspath(path)) if path else None)}'
    else:
        sem = S.name
    fmt = S.format
    lines = [f'semiring: {sem}', f'alphabet: {" ".join(A.alphabet)}', f'dim: {A.dim}',
             f'alpha: {" ".join(fmt(x) for x in A.alpha.row_tuple(0))}']
    for a, M in zip(A.alphabet, A.trans):
        lines.append(f'M {a}:')
        lines.extend(_format_matrix(M))
    lines.append(f'beta: {" ".join(fmt(x) for x in A.beta.col_tuple(0))}')
    return '\n'.join(lines) + '\n'


def load_automaton(path):
    return parse_automaton(_read_text(path), path)


def save_automaton(A, path, table_path=None):
    S = A.semiring
    if isinstance(S, TableSemiring) and table_path is None and getattr(S, 'path', None) is None:
        table_path = os.path.splitext(path)[0] + '.table'
        save_table(S, table_path)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_automaton(A, path, table_path))


# --- certificates and chains ---------------------------------------------------

def parse_certificate(text, path=None, source=None, target=None):
    """Parse a simulation certificate.

    ``source``/``target`` automata may be supplied directly, in which case
    the corresponding header lines are optional and ignored.
    """
    r = _Reader(text, path)
    base = os.path.dirname(path) if path else '.'
    loaded = {}
    for key, given in (('source', source), ('target', target)):
        words = r.peek_words()
        if words and words[0] == f'{key}:':
            toks = r.header(key)
            if len(toks) != 1:
                raise r.error(f'{key}: expects one path', r.lines[r.pos - 1][0])
            loaded[key] = given if given is not None else load_automaton(_resolve(base, toks[0][1]))
        elif given is None:
            raise r.error(f'expected "{key}: <path>"')
        else:
            loaded[key] = given
    A, B = loaded['source'], loaded['target']
    if r.header('X'):
        raise r.error('X: rows go on the following lines')
    X = _read_matrix(r, A.semiring, A.dim, B.dim)
    r.finish()
    return SimulationCertificate(A, B, X)


def format_certificate(cert, source_path, target_path, path=None):
    d = os.path.dirname(os.path.abspath(path)) if path else None
    lines = [f'source: {_relpath(source_path, d)}', f'target: {_relpath(target_path, d)}', 'X:']
    lines.extend(_format_matrix(cert.X))
    return '\n'.join(lines) + '\n'


def load_certificate(path, source=None, target=None):
    return parse_certificate(_read_text(path), path, source, target)


def save_certificate(cert, path, source_path, target_path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_certificate(cert, source_path, target_path, path))


def parse_chain(text, path=None, automata=None):
    """Parse a chain file.  ``automata`` may override the listed automaton files."""
    r = _Reader(text, path)
    base = os.path.dirname(path) if path else '.'
    toks = r.header('automata')
    if not toks:
        raise r.error('automata: expects at least one path', r.lines[r.pos - 1][0])
    if automata is None:
        autos = [load_automaton(_resolve(base, t)) for _, t in toks]
    else:
        if len(automata) != len(toks):
            raise r.error('number of supplied automata does not match the file')
        autos = list(automata)
    links = []
    for i in range(len(autos) - 1):
        words = r.peek_words()
        no = r.lines[r.pos][0] if words else None
        if (not words or len(words) != 3 or words[0] != 'link' or words[1] != str(i + 1)
                or words[2][:-1] not in (FORWARD, BACKWARD) or not words[2].endswith(':')):
            raise r.error(f'expected "link {i + 1} forward:" or "link {i + 1} backward:"', no)
        direction = words[2][:-1]
        r.pos += 1
        P, Q = autos[i], autos[i + 1]
        rows, cols = (P.dim, Q.dim) if direction == FORWARD else (Q.dim, P.dim)
        links.append(Link(direction, _read_matrix(r, P.semiring, rows, cols)))
    r.finish()
    return ChainCertificate(autos, links)


def format_chain(chain, automaton_paths, path=None):
    d = os.path.dirname(os.path.abspath(path)) if path else None
    lines = ['automata: ' + ' '.join(_relpath(p, d) for p in automaton_paths)]
    for i, link in enumerate(chain.links, 1):
        lines.append(f'link {i} {link.direction}:')
        lines.extend(_format_matrix(link.X))
    return '\n'.join(lines) + '\n'


def load_chain(path, automata=None):
    return parse_chain(_read_text(path), path, automata)


def save_chain(chain, path, automaton_paths):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_chain(chain, automaton_paths, path))
