import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def report(capsys):
    """Print one PASS/FAIL line for an acceptance criterion, bypassing capture."""

    def _report(num, name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {name}" + (f" ({detail})" if detail else ""))
        return ok

    return _report
