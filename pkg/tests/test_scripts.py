import pathlib
import subprocess
import sys

import pytest

SCRIPTS = pathlib.Path(__file__).parents[1] / "scripts"


@pytest.mark.parametrize("name, args", [
    ("two_circle_series.py", ["--r1", "1", "--r2", "2"]),
    ("sign_map.py", ["--n", "9"]),
    ("hyperboloid_sweep.py", ["--steps", "20", "--d-max", "10"]),
])
def test_script_runs(name, args):
    proc = subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    rows = proc.stdout.strip().splitlines()
    assert len(rows) > 2 and "," in rows[0]
