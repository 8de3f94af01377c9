import random

import pytest

from socle_lab import GF, QQ, DEGREVLEX, IdealHandle, Ring
from socle_lab import cache

F101 = GF(101)


@pytest.fixture(autouse=True)
def _no_disk_cache():
    cache.set_cache_dir(None)
    yield


@pytest.fixture
def qq_xy():
    return Ring(("x", "y"), QQ)


@pytest.fixture
def f101_xy():
    return Ring(("x", "y"), F101)


def random_polynomial(ring, rng, max_degree=3, max_terms=4):
    """Random sparse polynomial with small support."""
    n = len(ring.variables)
    p = ring.field.characteristic
    poly = ring.zero
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(n)] += 1
        if sum(exps) > max_degree:
            continue
        c = rng.randrange(1, p) if p else rng.choice([-3, -2, -1, 1, 2, 3])
        poly = poly + ring.monomial(exps, c)
    return poly


def random_ideal(ring, rng, ngens=3, max_degree=3):
    gens = []
    while len(gens) < ngens:
        f = random_polynomial(ring, rng, max_degree=max_degree)
        if not f.is_zero and f.degree() >= 1:
            gens.append(f)
    return IdealHandle(ring, gens)


def rings_for_sizes(field=F101):
    return [
        Ring(("x",), field),
        Ring(("x", "y"), field),
        Ring(("x", "y", "z"), field),
    ]
