import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from nlcg.hypercore import Hypergraph  # noqa: E402
from nlcg.tranquil import LabellingFamily  # noqa: E402

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES = []

TRIPLES_NAMES = "abcdefg"
A, B, C = 0, 1, 2


def triples_hypergraph():
    """A={b,c,d}, B={c,f,g}, C={d,e,f} on vertices a..g = 0..6."""
    v = {name: i for i, name in enumerate(TRIPLES_NAMES)}
    return Hypergraph(7, 3, ((v["b"], v["c"], v["d"]), (v["c"], v["f"], v["g"]), (v["d"], v["e"], v["f"])))


def _family(spec):
    v = {name: i for i, name in enumerate(TRIPLES_NAMES)}
    return LabellingFamily({j: {v[x]: lab for x, lab in spec[j].items()} for j in range(3)})


def triples_labelling():
    return _family({A: {"b": 1, "c": 2, "d": 3}, B: {"f": 1, "g": 2, "c": 3}, C: {"d": 1, "f": 2, "e": 3}})


def triples_bad_labelling():
    return _family({A: {"c": 2, "d": 1, "b": 3}, B: {"c": 1, "f": 2, "g": 3}, C: {"f": 1, "d": 3, "e": 2}})


@pytest.fixture
def triples():
    return triples_hypergraph(), triples_labelling()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
