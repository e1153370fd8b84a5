import random

import pytest
from hypothesis import settings

from legkh import corpus
from legkh.diagram import orient, random_front

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# Fronts whose homology the oracle can afford.
ORACLE_NAMES = ("unknot", "rh_trefoil", "lh_trefoil", "hopf", "chekanov1", "chekanov2")


def oriented(name, reversed_components=()):
    return orient(corpus.load(name), reversed_components)


def random_fronts(count, seed, max_crossings=8):
    rng = random.Random(seed)
    return [random_front(rng, max_crossings=max_crossings) for _ in range(count)]


@pytest.fixture(params=corpus.STANDARD)
def corpus_front(request):
    return request.param, oriented(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
