import time
from contextlib import contextmanager

import pytest

PAPER_MODULI = (4, 7, 8, 9, 20, 24, 40, 104, 120)

_criteria = []


@pytest.fixture
def criterion():
    """Record an acceptance criterion's verdict and wall time for the summary."""

    @contextmanager
    def run(label, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None:
                assert elapsed < limit, f"{label}: {elapsed:.2f}s exceeds {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            _criteria.append((label, ok, elapsed, limit))

    return run


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, limit in _criteria:
        budget = f" (limit {limit}s)" if limit else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  [{elapsed:.2f}s{budget}]")
