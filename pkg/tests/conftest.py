"""Shared fixtures.  The session refuses to start if a shipped table is bad."""

import random

import pytest

from handlebody_mcg.generators import (
    TABLE_GENERA,
    all_generator_names,
    derive_generator,
    load_table,
    run_oracles,
)
from handlebody_mcg.surface import SurfaceModel
from handlebody_mcg.words import Alphabet, reduce


def _table_problems():
    problems = []
    for g in TABLE_GENERA:
        model = SurfaceModel(g)
        for name in all_generator_names(g):
            shipped = load_table(g, name)
            if shipped is None:
                problems.append(f"g={g} {name}: missing from data file")
                continue
            if shipped != derive_generator(model, name):
                problems.append(f"g={g} {name}: differs from its recipe")
            rep = run_oracles(model, name, shipped)
            if not rep.ok:
                problems.append(f"g={g} {name}: oracle failure {rep}")
    return problems


def pytest_sessionstart(session):
    problems = _table_problems()
    if problems:
        pytest.exit("generator tables failed their oracles:\n" + "\n".join(problems), returncode=4)


def random_word(alphabet: Alphabet, rng: random.Random, max_len: int = 12):
    n = rng.randint(0, max_len)
    return reduce(alphabet, [(rng.randrange(alphabet.rank), rng.choice((1, -1))) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=[1, 2, 3])
def model(request):
    return SurfaceModel(request.param)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict = {}


def record(criterion: int, passed: bool, detail: str = ""):
    ACCEPTANCE_LINES[criterion] = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
    print(ACCEPTANCE_LINES[criterion])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
