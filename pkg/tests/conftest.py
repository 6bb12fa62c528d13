import pytest
from hypothesis import HealthCheck, settings

from psydx.kb import load_kb

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def kb():
    return load_kb()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"ACCEPTANCE {outcome}: {name}")
