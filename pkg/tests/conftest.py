import time
from contextlib import contextmanager

import pytest

_RESULTS: dict[int, tuple[str, bool, float, float | None]] = {}


class _Criterion:
    def __init__(self, number: int, title: str, limit: float | None):
        self.number, self.title, self.limit = number, title, limit


@pytest.fixture
def criterion():
    """Context manager that times a block and records a PASS/FAIL line.

    A block fails if it raises or exceeds its runtime limit (seconds).
    """

    @contextmanager
    def _run(number: int, title: str, limit: float | None = None):
        start = time.perf_counter()
        ok = False
        try:
            yield _Criterion(number, title, limit)
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = limit is None or elapsed < limit
            _RESULTS[number] = (title, ok and within, elapsed, limit)
        assert within, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"

    return _run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, elapsed, limit = _RESULTS[number]
        bound = f" (limit {limit:g}s)" if limit is not None else ""
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  {elapsed:.2f}s{bound}"
        )
