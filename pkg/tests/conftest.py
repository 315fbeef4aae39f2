import contextlib
import time

ACCEPTANCE_RESULTS = []


@contextlib.contextmanager
def criterion(label, time_limit=None):
    """Record a pass/fail line for one acceptance criterion, including its time limit."""
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if time_limit is not None:
            assert elapsed < time_limit, f"{label}: took {elapsed:.2f}s, limit {time_limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_RESULTS.append(("FAIL", label, elapsed, exc.__class__.__name__))
        raise
    ACCEPTANCE_RESULTS.append(("PASS", label, elapsed, ""))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, elapsed, note in ACCEPTANCE_RESULTS:
        suffix = f" ({note})" if note else ""
        terminalreporter.write_line(f"{status}  {label}  [{elapsed:.2f}s]{suffix}")
