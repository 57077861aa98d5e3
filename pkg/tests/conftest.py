import sys
import random

import pytest

from projtorsor.exact_algebra import GF, OCTONION, RATIONAL, random_scalar


@pytest.fixture
def rng():
    return random.Random(12345)


KINDS = [GF(7), RATIONAL, OCTONION]


def draws(kind, rng, k, nonzero=False):
    return [random_scalar(kind, rng, nonzero=nonzero) for _ in range(k)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(verdicts, key=lambda k: (int(k.split()[0]), k)):
        terminalreporter.write_line(verdicts[key])
