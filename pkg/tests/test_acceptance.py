"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import json

import pytest

from sigma1.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    res = run_criterion(number, seed=0)
    with capsys.disabled():
        print(f"\n{res.line()} ({res.seconds:.1f}s)")
    assert res.seconds < 60
    assert res.ok, json.dumps(res.to_json(), default=str)[:4000]
