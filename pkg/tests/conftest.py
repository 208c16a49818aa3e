from pathlib import Path

import pytest

from apc.fixtures import fix8, fix8gp, fix8s

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# criterion number -> (passed, summary), filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def f8():
    return fix8()


@pytest.fixture(scope="session")
def f8gp():
    return fix8gp()


@pytest.fixture(scope="session")
def f8s():
    return fix8s()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} {text}")
