import pytest

from powerfree import kernels

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", params=sorted(kernels.available_backends()))
def kernel(request):
    """Each available kernel module in turn (compiled and pure Python)."""
    return kernels.available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria (kernel backend: {kernels.BACKEND})")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
