import os
import pytest
from hypothesis import HealthCheck, settings

from strategies import GRAPHS, GROUPOIDS

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))



@pytest.fixture(params=GROUPOIDS, ids=lambda e: e.name)
def groupoid_entry(request):
    return request.param


@pytest.fixture(params=GRAPHS, ids=lambda e: e.name)
def graph_entry(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
