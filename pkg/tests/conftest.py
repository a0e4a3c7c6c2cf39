import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def gf4():
    from quasielliptic.fields import field

    return field(2, 2)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
    passed = sum(1 for line in ACCEPTANCE_LINES.values() if line.startswith("[PASS]"))
    terminalreporter.write_line(f"{passed}/{len(ACCEPTANCE_LINES)} criteria pass")
