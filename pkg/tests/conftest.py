import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_CRITERIA: list[str] = []


@pytest.fixture
def record_criterion():
    """Record one acceptance line; the line is echoed in the terminal summary."""
    def record(label: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
        status = "PASS" if ok and elapsed < limit else "FAIL"
        line = f"{status}  {label}  ({elapsed:.2f} s, limit {limit:g} s)"
        if detail:
            line += f"  {detail}"
        _CRITERIA.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
