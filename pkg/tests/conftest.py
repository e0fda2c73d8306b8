import random

import pytest

# criterion number -> list of (label, passed, seconds); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[num]
        ok = all(p for _, p, _ in parts)
        secs = sum(s for _, _, s in parts)
        failed = [lbl for lbl, p, _ in parts if not p]
        extra = f"  failing: {', '.join(failed)}" if failed else ""
        tr.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  ({secs:.2f}s){extra}")


@pytest.fixture
def rng():
    return random.Random(20240611)
