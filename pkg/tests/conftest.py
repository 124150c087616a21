import importlib

import pytest

from sdcalc import _pykernels

KERNEL_MODULES = [pytest.param(_pykernels, id="python")]
try:
    _ckernels = importlib.import_module("sdcalc._ckernels")
except ImportError:
    KERNEL_MODULES.append(pytest.param(None, id="cython",
                                       marks=pytest.mark.skip("extension not built")))
else:
    KERNEL_MODULES.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNEL_MODULES)
def backend(request):
    return request.param


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
