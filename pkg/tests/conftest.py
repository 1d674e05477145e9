from __future__ import annotations

import random

import pytest

from fanopoly import verification_corpus


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the long cross-checks (larger enumeration box, etc.)",
    )

def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def unimodular_matrix(d: int, rng: random.Random, steps: int | None = None):
    """Random unimodular matrix as a short product of elementary matrices."""
    if steps is None:
        steps = d + 4
    m = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.randrange(d), rng.randrange(d)
        if op == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(d):
                m[i][k] += c * m[j][k]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-x for x in m[i]]
    return tuple(tuple(row) for row in m)


def apply_matrix(m, vertices):
    d = len(m)
    return tuple(
        tuple(sum(m[r][k] * v[k] for k in range(d)) for r in range(d))
        for v in vertices
    )


@pytest.fixture(scope="session")
def corpus():
    """The named verification corpus: 16 polygons + catalog members d <= 6."""
    return verification_corpus(6)


@pytest.fixture(scope="session")
def small_corpus():
    """Corpus members of dimension at most 4 (cheap enough for tight loops)."""
    return [(name, p) for name, p in verification_corpus(4)]
