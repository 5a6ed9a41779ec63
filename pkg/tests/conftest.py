import pytest
from hypothesis import settings

from detlab import RATIONAL, FieldDescriptor

settings.register_profile("detlab", deadline=None)
settings.load_profile("detlab")

FIELDS = [RATIONAL, FieldDescriptor.gf(7)]

_acceptance = []


@pytest.fixture(params=FIELDS, ids=lambda f: f.name)
def field(request):
    return request.param


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
