import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion_log():
    """Record the PASS/FAIL line of one acceptance criterion."""

    def log(number: int, passed: bool, text: str, seconds: float, bound: float | None = None):
        timely = bound is None or seconds < bound
        verdict = "PASS" if passed and timely else "FAIL"
        limit = f", bound {bound:g}s" if bound is not None else ""
        line = f"{verdict} criterion {number}: {text} ({seconds:.2f}s{limit})"
        CRITERIA[number] = line
        print(line)
        return passed and timely

    return log


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
