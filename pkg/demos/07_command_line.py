"""
The command line
================

Writes a few automaton files to a scratch directory and drives the
``wfasim`` command on them.  Every certificate the tool writes can be fed
back to ``check-sim`` or ``verify-chain``.
"""

import os
import tempfile

from wfasim import BOOL, RAT, Automaton
from wfasim.cli import main
from wfasim.io import save_automaton

d = tempfile.mkdtemp(prefix='wfasim-demo-')
A = Automaton.build(RAT, 'a', [1, 0], {'a': [[1, 1], [1, 1]]}, [1, 1])
B = Automaton.build(RAT, 'a', [1], {'a': [[2]]}, [1])
save_automaton(A, os.path.join(d, 'A.wfa'))
save_automaton(B, os.path.join(d, 'B.wfa'))
print(open(os.path.join(d, 'A.wfa')).read())


def wfasim(*args):
    print('$ wfasim', ' '.join(args))
    code = main(list(args))
    print(f'(exit {code})\n')


os.chdir(d)
wfasim('eval', 'A.wfa', 'aaa')
wfasim('enum', 'B.wfa', '--max-len', '3')
wfasim('decide', 'A.wfa', 'B.wfa', '--out', 'evidence')
wfasim('check-sim', 'evidence/X.sim')
wfasim('verify-chain', 'evidence/chain.chain')

one = Automaton.build(BOOL, 'a', [1, 0], {'a': [[0, 1], [0, 0]]}, [0, 1])
two = Automaton.build(BOOL, 'a', [1, 0, 0], {'a': [[0, 1, 0], [0, 0, 1], [0, 0, 0]]}, [0, 0, 1])
save_automaton(one, 'one.wfa')
save_automaton(two, 'two.wfa')
wfasim('--json', 'decide', 'one.wfa', 'two.wfa')
