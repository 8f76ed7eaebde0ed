import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(p.name for p in DEMOS.glob("0[1-4]_*.py")))
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(DEMOS / script)], capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()


def test_fnc1_demo_needs_a_path():
    proc = subprocess.run([sys.executable, str(DEMOS / "05_fnc1_pipeline.py")], capture_output=True, text=True)
    assert proc.returncode == 1
    assert "Usage" in proc.stderr
