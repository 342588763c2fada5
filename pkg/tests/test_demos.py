import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=[p.stem for p in DEMOS])
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, timeout=120, check=False)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()


def test_sample_edge_lists_parse():
    from acqnet import classify, parse_edge_list

    data = Path(__file__).parent.parent / "demos" / "data"
    families = {p.stem: classify(parse_edge_list(p.read_text(), p.name)).family.value for p in data.glob("*.edges")}
    assert families == {"k23": "social_circle", "petersen": "hamlet", "p5": "not_acquaintance"}
