import random
from fractions import Fraction

import pytest

from pathmodel.paths import PLPath

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, text = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        # a criterion spread over several tests passes only if all of them do
        failed = rep.failed or _CRITERIA.get(n, (text, "PASS"))[1] == "FAIL"
        _CRITERIA[n] = (text, "FAIL" if failed else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        text, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")


def random_path(R, rng: random.Random, integral: bool, max_segments: int = 4, spread: int = 3) -> PLPath:
    """A path with 1..max_segments random nonzero rational displacements."""
    segs = []
    for _ in range(rng.randint(1, max_segments)):
        while True:
            den = 1 if integral else rng.choice([1, 2, 3])
            d = tuple(Fraction(rng.randint(-spread, spread), den) for _ in range(R.rank))
            if any(d):
                break
        segs.append(d)
    return PLPath(R, segs)


@pytest.fixture
def rng():
    return random.Random(20240607)
