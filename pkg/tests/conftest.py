import pytest

from hkinv.perm import parse_group

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(spec, aut="sn"):
        if (spec, aut) not in cache:
            cache[spec, aut] = parse_group(spec, aut)
        return cache[spec, aut]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
