import glob
import os
import subprocess
import sys

import pytest

DEMOS = sorted(glob.glob(os.path.join(os.path.dirname(__file__), '..', 'demos', '*.py')))


@pytest.mark.parametrize('path', DEMOS, ids=os.path.basename)
def test_demo_runs(path, tmp_path):
    p = subprocess.run([sys.executable, os.path.abspath(path)], cwd=tmp_path,
                       capture_output=True, text=True, timeout=120)
    assert p.returncode == 0, p.stderr
    assert p.stdout
