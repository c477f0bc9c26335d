import random

import pytest

from burnzeta import EquivariantMap, GSet, coset_gset, disjoint_union, named_group


@pytest.fixture(scope="session")
def s3():
    return named_group("symmetric", 3)


@pytest.fixture(scope="session")
def z6():
    return named_group("cyclic", 6)


@pytest.fixture(scope="session")
def d4():
    return named_group("dihedral", 4)


def relabel(x, rng):
    """Conjugate the action by a random permutation of the points."""
    perm = list(range(x.size))
    rng.shuffle(perm)
    inv = [0] * x.size
    for i, p in enumerate(perm):
        inv[p] = i
    act = [tuple(perm[row[inv[q]]] for q in range(x.size)) for row in x.act]
    return GSet(x.group, act, validate=False, size=x.size)


def random_gset(group, rng, max_orbits=4, classes=None):
    lat = group.lattice()
    pool = list(classes) if classes is not None else list(range(len(lat)))
    k = rng.randint(1, max_orbits)
    parts = [coset_gset(lat, rng.choice(pool)) for _ in range(k)]
    return relabel(disjoint_union(*parts), rng)


def random_equivariant_map(x, rng, same_stratum=False, blocks=None):
    """Pick an image for each orbit representative among the points its stabilizer fixes.

    ``blocks`` (a list of point sets) restricts images to the block of the source.
    """
    images = [None] * x.size
    orbs = x.orbits
    cls_of = [orbs.orbits[orbs.projection[p]][1] for p in range(x.size)]
    for orb, cls in orbs.orbits:
        rep = orb[0]
        stab = [g for g in range(x.group.order) if x.act[g][rep] == rep]
        cands = [y for y in range(x.size) if all(x.act[g][y] == y for g in stab)]
        if same_stratum:
            cands = [y for y in cands if cls_of[y] == cls]
        if blocks is not None:
            blk = next(b for b in blocks if rep in b)
            cands = [y for y in cands if y in blk]
        y = rng.choice(cands)
        for g in range(x.group.order):
            images[x.act[g][rep]] = x.act[g][y]
    return EquivariantMap(x, images)


@pytest.fixture
def rng():
    return random.Random(20261014)


def cyclic_shift_example(group, h, k, g):
    """X = (G/H) x Z_k with phi(a, i) = (a, i+1) for i < k-1 and phi(a, k-1) = (g a, 0).

    Point ``i * |G/H| + a`` is the pair (a, i).
    """
    lat = group.lattice()
    layer = coset_gset(lat, h)
    x = disjoint_union(*[layer] * k)
    n = layer.size
    images = []
    for i in range(k):
        for a in range(n):
            images.append((i + 1) * n + a if i < k - 1 else layer.act[g][a])
    return EquivariantMap(x, images)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
