"""Command line front end: ``wfasim <subcommand> ...``.

Exit status: 0 success / pass / EQUIVALENT, 1 fail / INEQUIVALENT,
2 INCONCLUSIVE / budget exhausted, 64 usage error, 65 parse error.
"""

import argparse
import json
import os
import sys
from dataclasses import fields

from wfasim.decide import Budget, Outcome, decide_equiv, tropical_probe
from wfasim.errors import AlphabetMismatch, ParseError, SemiringMismatch, ShapeError, UnsupportedSemiring
from wfasim.io import (load_automaton, load_certificate, load_chain, load_table, save_automaton,
                       save_certificate, save_chain)
from wfasim.joint import CapExhausted, InequivalenceWitness, emit_chain, joint
from wfasim.semiring import validate_table_semiring
from wfasim.simulation import SimulationCertificate, verify_chain
from wfasim.wfa import behavior_coeff, enumerate_coeffs, word_str

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 64, 65

EMPTY_WORD = 'ε'


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


class _Out:
    """Collects text lines or a JSON record depending on ``--json``."""

    def __init__(self, as_json, stream):
        self.as_json = as_json
        self.stream = stream
        self.record = {}

    def line(self, text):
        if not self.as_json:
            print(text, file=self.stream)

    def set(self, **kv):
        self.record.update(kv)

    def flush(self):
        if self.as_json:
            json.dump(self.record, self.stream, indent=2, sort_keys=True)
            self.stream.write('\n')


def _show_word(w):
    return word_str(w) if w else EMPTY_WORD


def _witness_record(S, w):
    return {'word': list(w.word), 'lhs': S.format(w.lhs), 'rhs': S.format(w.rhs)}


def _budget(args):
    kw = {}
    if args.config:
        try:
            with open(args.config, encoding='utf-8') as f:
                cfg = json.load(f)
        except OSError as e:
            raise ParseError(f'cannot read file: {e.strerror}', args.config) from None
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, args.config, e.lineno, e.colno) from None
        names = {f.name for f in fields(Budget)}
        unknown = set(cfg) - names
        if unknown:
            raise UsageError(f'unknown budget keys in {args.config}: {sorted(unknown)}')
        kw.update(cfg)
    for f in fields(Budget):
        v = getattr(args, f.name, None)
        if v is not None:
            kw[f.name] = v
    try:
        return Budget(**kw)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from None


def cmd_eval(args, out):
    A = load_automaton(args.automaton)
    word = '' if args.word == EMPTY_WORD else args.word
    c = behavior_coeff(A, A.as_word(word))
    out.line(A.semiring.format(c))
    out.set(word=list(A.as_word(word)), coefficient=A.semiring.format(c))
    return EXIT_OK


def cmd_enum(args, out):
    A = load_automaton(args.automaton)
    rows = []
    for w, c in enumerate_coeffs(A, args.max_len):
        out.line(f'{_show_word(w)}\t{A.semiring.format(c)}')
        rows.append({'word': list(w), 'coefficient': A.semiring.format(c)})
    out.set(coefficients=rows)
    return EXIT_OK


def cmd_check_sim(args, out):
    if len(args.paths) == 1:
        cert = load_certificate(args.paths[0])
    elif len(args.paths) == 3:
        A, B = load_automaton(args.paths[0]), load_automaton(args.paths[1])
        cert = load_certificate(args.paths[2], A, B)
    else:
        raise UsageError('check-sim takes CERT or A B CERT')
    rep = cert.check()
    out.line(str(rep))
    out.set(ok=rep.ok, identity=rep.identity, letter=rep.letter,
            index=list(rep.index) if rep.index else None)
    return EXIT_OK if rep else EXIT_FAIL


def cmd_verify_chain(args, out):
    if len(args.paths) == 1:
        chain = load_chain(args.paths[0])
        A, B = chain.automata[0], chain.automata[-1]
    elif len(args.paths) == 3:
        A, B = load_automaton(args.paths[1]), load_automaton(args.paths[2])
        chain = load_chain(args.paths[0])
    else:
        raise UsageError('verify-chain takes CHAIN or CHAIN A B')
    rep = verify_chain(chain, A, B)
    out.line(str(rep))
    out.set(ok=rep.ok, link=rep.link, reason=rep.reason, length=len(chain))
    return EXIT_OK if rep else EXIT_FAIL


def _write_evidence(j, A, B, a_path, b_path, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    A_paths = os.path.abspath(a_path), os.path.abspath(b_path)
    c_path = os.path.join(out_dir, 'C.wfa')
    table = getattr(j.C.semiring, 'path', None)
    save_automaton(j.C, c_path, table)
    files = {'C': c_path, 'X': os.path.join(out_dir, 'X.sim'), 'Y': os.path.join(out_dir, 'Y.sim'),
             'chain': os.path.join(out_dir, 'chain.chain')}
    save_certificate(SimulationCertificate(j.C, A, j.X), files['X'], c_path, A_paths[0])
    save_certificate(SimulationCertificate(j.C, B, j.Y), files['Y'], c_path, A_paths[1])
    save_chain(emit_chain(j, A, B), files['chain'], [A_paths[0], c_path, A_paths[1]])
    return files


def _joint_summary(j):
    return {'mode': j.mode, 'p': j.dim, 'iterations': j.iterations}


def cmd_joint(args, out):
    A, B = load_automaton(args.a), load_automaton(args.b)
    res = joint(A, B, args.cap)
    S = A.semiring
    if isinstance(res, InequivalenceWitness):
        out.line(f'INEQUIVALENT: witness {_show_word(res.word)} '
                 f'({S.format(res.lhs)} != {S.format(res.rhs)})')
        out.set(result='witness', witness=_witness_record(S, res))
        return EXIT_FAIL
    if isinstance(res, CapExhausted):
        out.line(f'INCONCLUSIVE: module still growing after words of length {res.iterations} '
                 f'(rank {res.rank})')
        out.set(result='cap-exhausted', iterations=res.iterations, rank=res.rank)
        return EXIT_INCONCLUSIVE
    files = _write_evidence(res, A, B, args.a, args.b, args.out)
    summary = _joint_summary(res)
    with open(os.path.join(args.out, 'summary.txt'), 'w', encoding='utf-8') as f:
        f.writelines(f'{k}: {v}\n' for k, v in summary.items())
    out.line(f'joint automaton: mode {res.mode}, p = {res.dim}, iterations = {res.iterations}')
    for k, v in files.items():
        out.line(f'wrote {k}: {v}')
    out.set(result='joint', files=files, **summary)
    return EXIT_OK


def cmd_decide(args, out):
    budget = _budget(args)
    if args.explain_budget:
        out.line(budget.explain())
        out.set(budget={f.name: getattr(budget, f.name) for f in fields(Budget)})
        return EXIT_OK
    if len(args.paths) != 2:
        raise UsageError('decide takes A B')
    A, B = (load_automaton(p) for p in args.paths)
    v = decide_equiv(A, B, budget, args.strategy)
    S = A.semiring
    out.set(verdict=v.outcome.value, method=v.method)
    out.line(f'{v.outcome.value} ({v.method})')
    if v.outcome is Outcome.INEQUIVALENT:
        w = v.witness
        out.line(f'witness: {_show_word(w.word)} ({S.format(w.lhs)} != {S.format(w.rhs)})')
        out.set(witness=_witness_record(S, w))
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            wp = os.path.join(args.out, 'witness.txt')
            with open(wp, 'w', encoding='utf-8') as f:
                f.write(f'word: {" ".join(w.word)}\nA: {S.format(w.lhs)}\nB: {S.format(w.rhs)}\n')
            out.line(f'wrote witness: {wp}')
            out.set(files={'witness': wp})
        return EXIT_FAIL
    if v.outcome is Outcome.EQUIVALENT:
        out.line(f'chain of length {len(v.chain)}')
        out.set(chain_length=len(v.chain))
        if v.joint is not None:
            out.set(**_joint_summary(v.joint))
            if args.out:
                files = _write_evidence(v.joint, A, B, args.paths[0], args.paths[1], args.out)
                for k, p in files.items():
                    out.line(f'wrote {k}: {p}')
                out.set(files=files)
        elif args.out:
            os.makedirs(args.out, exist_ok=True)
            paths = [os.path.abspath(args.paths[0])]
            for i, C in enumerate(v.chain.automata[1:-1], 1):
                p = os.path.join(args.out, f'C{i}.wfa')
                save_automaton(C, p, getattr(S, 'path', None))
                paths.append(p)
            paths.append(os.path.abspath(args.paths[1]))
            if len(v.chain.automata) == 1:
                paths = paths[:1]
            cp = os.path.join(args.out, 'chain.chain')
            save_chain(v.chain, cp, paths)
            out.line(f'wrote chain: {cp}')
            out.set(files={'chain': cp})
        return EXIT_OK
    for e in v.exhausted:
        out.line(f'exhausted {e.procedure} after {e.explored} steps' + (f': {e.detail}' if e.detail else ''))
    out.set(exhausted=[{'procedure': e.procedure, 'explored': e.explored, 'detail': e.detail}
                       for e in v.exhausted])
    return EXIT_INCONCLUSIVE


def cmd_probe(args, out):
    A, B = load_automaton(args.a), load_automaton(args.b)
    rep = tropical_probe(A, B, _budget(args), args.bound)
    S = A.semiring
    out.line(rep.summary())
    for d in rep.directions:
        if d.X is not None:
            out.line(f'{d.direction} simulation: ' + '; '.join(' '.join(S.format(x) for x in row)
                                                               for row in d.X))
    out.set(outcome=rep.outcome, entry_bound=rep.entry_bound,
            witness=_witness_record(S, rep.witness) if rep.witness else None,
            directions=[{'direction': d.direction, 'status': d.status, 'candidates': d.candidates,
                         'X': None if d.X is None else [[S.format(x) for x in r] for r in d.X]}
                        for d in rep.directions],
            note=rep.NOTE)
    return {'witness': EXIT_FAIL, 'simulation': EXIT_OK}.get(rep.outcome, EXIT_INCONCLUSIVE)


def cmd_validate(args, out):
    t = load_table(args.table)
    rep = validate_table_semiring(t)
    if rep:
        out.line(f'pass ({rep.checked} triples checked)')
    for v in rep.violations:
        out.line(f'fail: {v}')
    out.set(ok=rep.ok, checked=rep.checked,
            violations=[{'axiom': v.axiom, 'witness': list(v.witness)} for v in rep.violations],
            flags=t.flags)
    return EXIT_OK if rep else EXIT_FAIL


def _add_budget_flags(p):
    p.add_argument('--config', help='JSON file with budget fields')
    p.add_argument('--max-word-len', dest='max_word_len', type=int)
    p.add_argument('--max-chain-len', dest='max_chain_len', type=int)
    p.add_argument('--max-intermediate-dim', dest='max_intermediate_dim', type=int)
    p.add_argument('--max-steps', dest='max_steps', type=int)
    p.add_argument('--integer-cap', dest='integer_cap', type=int)


def build_parser():
    p = _Parser(prog='wfasim', description='Weighted automata: evaluation, simulations, equivalence.')
    p.add_argument('--json', action='store_true', help='machine-readable JSON output')
    sub = p.add_subparsers(dest='command', required=True, parser_class=_Parser)

    s = sub.add_parser('eval', help='coefficient of one word')
    s.add_argument('automaton')
    s.add_argument('word', help=f'the word; use "" or {EMPTY_WORD} for the empty word')
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser('enum', help='coefficients of all words up to a length')
    s.add_argument('automaton')
    s.add_argument('--max-len', type=int, default=4)
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser('check-sim', help='verify a simulation certificate')
    s.add_argument('paths', nargs='+', metavar='FILE', help='CERT, or A B CERT')
    s.set_defaults(func=cmd_check_sim)

    s = sub.add_parser('verify-chain', help='verify a chain of simulations')
    s.add_argument('paths', nargs='+', metavar='FILE', help='CHAIN, or CHAIN A B')
    s.set_defaults(func=cmd_verify_chain)

    s = sub.add_parser('joint', help='build the joint automaton C with C -> A and C -> B')
    s.add_argument('a')
    s.add_argument('b')
    s.add_argument('--out', default='joint-out', help='output directory')
    s.add_argument('--cap', type=int, default=Budget().integer_cap)
    s.set_defaults(func=cmd_joint)

    s = sub.add_parser('decide', help='decide equivalence and write the evidence')
    s.add_argument('paths', nargs='*', metavar='FILE', help='A B')
    s.add_argument('--out', help='directory for evidence files')
    s.add_argument('--strategy', choices=('auto', 'search'), default='auto')
    s.add_argument('--explain-budget', action='store_true', help='print the budget and exit')
    _add_budget_flags(s)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser('probe-tropical', help='bounded witness / simulation search over the tropical semiring')
    s.add_argument('a')
    s.add_argument('b')
    s.add_argument('--bound', type=int, default=4, help='largest finite matrix entry tried')
    _add_budget_flags(s)
    s.set_defaults(func=cmd_probe)

    s = sub.add_parser('validate-semiring', help='check the axioms of a semiring table')
    s.add_argument('table')
    s.set_defaults(func=cmd_validate)
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    out = _Out(args.json, stdout)
    try:
        code = args.func(args, out)
    except ParseError as e:
        print(f'parse error: {e}', file=stderr)
        return EXIT_PARSE
    except (UsageError, UnsupportedSemiring, SemiringMismatch, AlphabetMismatch, ShapeError) as e:
        print(f'error: {e}', file=stderr)
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == '__main__':
    sys.exit(main())
