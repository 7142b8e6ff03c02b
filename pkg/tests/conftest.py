import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")

CRITERIA = {
    1: "E6 classical golden decompositions",
    2: "E6 fusion golden decompositions",
    3: "su(3) level 2 path matrix and sums",
    4: "su(2) closed-form S matrix",
    5: "conjugation sum rules, classical and fused",
    6: "column sums vanish on complex and quaternionic weights",
    7: "accidental-vanishing census",
    8: "three fusion routes agree",
    9: "Frobenius-Schur indicator",
    10: "modular invariants and automorphism covariance",
}

_outcomes: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config.addinivalue_line("markers", "slow: takes tens of seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes.setdefault(marker.args[0], []).append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            terminalreporter.write_line(f"criterion {n:>2}: NOT RUN  {title}")
            continue
        failed = [name for name, out in results if out != "passed"]
        verdict = "FAIL" if failed else "PASS"
        detail = f"  failing: {', '.join(failed)}" if failed else ""
        terminalreporter.write_line(f"criterion {n:>2}: {verdict}  {title} ({len(results)} checks){detail}")
