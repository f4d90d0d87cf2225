import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize(
    "script, args",
    [
        ("01_basic_nominations.py", []),
        ("02_hard_load_caps.py", []),
        ("03_fractional_relaxation.py", []),
        ("04_soft_penalties.py", []),
        ("05_conference_scale.py", ["--quick"]),
    ],
)
def test_demo_runs_clean(script, args):
    result = subprocess.run(
        [sys.executable, str(DEMOS / script), *args],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip()
