"""Finite G-sets with an explicit action table."""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapacityError, ValidationError
from .groups import ConjClass, Group, Subgroup, SubgroupLattice

DEFAULT_MAX_POINTS = 2_000_000


def max_points() -> int:
    """Capacity guard for symmetric powers (env ``BURNZETA_MAX_POINTS``)."""
    value = os.environ.get("BURNZETA_MAX_POINTS")
    return int(value) if value else DEFAULT_MAX_POINTS


class GSet:
    """A finite set ``{0..size-1}`` with a left action ``act[g][x]``."""

    def __init__(self, group: Group, act: Sequence[Sequence[int]], validate: bool = True, size=None):
        self.group = group
        self.act = tuple(tuple(row) for row in act)
        if len(self.act) != group.order:
            raise ValidationError(f"action table needs {group.order} rows, got {len(self.act)}")
        self.size = len(self.act[0]) if size is None else size
        if validate:
            self.check_axioms()

    def __repr__(self):
        return f"GSet({self.group.name}, size={self.size})"

    def __len__(self):
        return self.size

    def check_axioms(self):
        n = self.size
        ident = tuple(range(n))
        for row in self.act:
            if len(row) != n or any(not 0 <= y < n for y in row):
                raise ValidationError("action row is not a map of the point set")
        if self.act[0] != ident:
            raise ValidationError("identity does not act trivially")
        p = self.group.product
        for g, rg in enumerate(self.act):
            for h, rh in enumerate(self.act):
                rgh = self.act[p[g][h]]
                if any(rg[rh[x]] != rgh[x] for x in range(n)):
                    raise ValidationError(f"act[{g}] o act[{h}] != act[{g}*{h}]")

    @classmethod
    def from_generator_images(cls, group: Group, size: int, images: Sequence[Sequence[int]]) -> "GSet":
        """Complete an action given on ``group.generators`` and verify it."""
        if group.parents is None:
            raise ValidationError("group does not record generator words")
        if len(images) != len(group.generators):
            raise ValidationError(f"expected images for {len(group.generators)} generators, got {len(images)}")
        gens = []
        for img in images:
            img = tuple(int(v) for v in img)
            if len(img) != size or sorted(img) != list(range(size)):
                raise ValidationError("generator image is not a permutation of the points")
            gens.append(img)
        act = [None] * group.order
        act[0] = tuple(range(size))
        for e in range(1, group.order):
            parent, k = group.parents[e]
            pa, gk = act[parent], gens[k]
            act[e] = tuple(pa[gk[x]] for x in range(size))
        return cls(group, act)

    @property
    def lattice(self) -> SubgroupLattice:
        return self.group.lattice()

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, tuple(g for g in range(self.group.order) if self.act[g][x] == x))

    def stabilizer_class(self, x: int) -> ConjClass:
        return self.lattice.classes[self.lattice.class_index(
            g for g in range(self.group.order) if self.act[g][x] == x)]

    @cached_property
    def orbits(self) -> "OrbitDecomposition":
        return orbit_decomposition(self)

    def orbit_of(self, x: int) -> tuple:
        return tuple(sorted({row[x] for row in self.act}))

    def is_invariant(self, points: Iterable[int]) -> bool:
        pts = set(points)
        return all(row[x] in pts for row in self.act for x in pts)

    def restrict(self, points: Iterable[int]):
        """Sub-G-set on an invariant subset; returns ``(gset, old_to_new)``."""
        pts = sorted(set(points))
        if not self.is_invariant(pts):
            raise ValidationError("subset is not G-invariant")
        new = {x: i for i, x in enumerate(pts)}
        act = [tuple(new[row[x]] for x in pts) for row in self.act]
        return GSet(self.group, act, validate=False, size=len(pts)), new


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple  # of (points tuple, class index)
    projection: tuple  # point -> orbit index

    def __len__(self):
        return len(self.orbits)


def orbit_decomposition(x: GSet) -> OrbitDecomposition:
    proj = [-1] * x.size
    orbits = []
    for p in range(x.size):
        if proj[p] >= 0:
            continue
        orb = x.orbit_of(p)
        for q in orb:
            proj[q] = len(orbits)
        cls = x.stabilizer_class(p)
        if len(orb) * cls.order != x.group.order:
            raise AssertionError("orbit-stabilizer violated")
        orbits.append((orb, cls.index))
    return OrbitDecomposition(tuple(orbits), tuple(proj))


def coset_gset(lattice: SubgroupLattice, h) -> GSet:
    """Left translation on the left cosets of the class representative."""
    cls = lattice.resolve(h)
    group = lattice.group
    sub = cls.representative.members
    cosets = {}
    order = []
    for x in range(group.order):
        key = frozenset(group.product[x][s] for s in sub)
        if key not in cosets:
            cosets[key] = len(order)
            order.append(x)
    act = []
    for g in range(group.order):
        act.append(tuple(cosets[frozenset(group.product[group.product[g][x]][s] for s in sub)]
                         for x in order))
    return GSet(group, act, validate=False)


def point_gset(group: Group) -> GSet:
    return GSet(group, [(0,)] * group.order, validate=False)


def empty_gset(group: Group) -> GSet:
    return GSet(group, [()] * group.order, validate=False, size=0)


def disjoint_union(*parts: GSet) -> GSet:
    if not parts:
        raise ValidationError("disjoint_union needs at least one G-set")
    group = parts[0].group
    if any(p.group is not group for p in parts):
        raise ValidationError("G-sets over different groups")
    act = []
    for g in range(group.order):
        row, off = [], 0
        for p in parts:
            row.extend(off + y for y in p.act[g])
            off += p.size
        act.append(tuple(row))
    return GSet(group, act, validate=False, size=sum(p.size for p in parts))


def fixed_set(x: GSet, f) -> frozenset:
    """Points fixed by every element of the subgroup ``f``."""
    if isinstance(f, ConjClass):
        f = f.representative
    if f.group is not x.group:
        raise ValidationError("subgroup of a different group")
    return frozenset(p for p in range(x.size) if all(x.act[g][p] == p for g in f.members))


def isotropy_stratum(x: GSet, h) -> frozenset:
    """Points whose stabilizer lies in the class ``h``."""
    cls = x.lattice.resolve(h)
    orbs = x.orbits
    return frozenset(p for p in range(x.size) if orbs.orbits[orbs.projection[p]][1] == cls.index)


def quotient(x: GSet, subgroup=None):
    """Orbit space of ``x`` (or of the action restricted to a subgroup).

    Returns ``(number_of_orbits, projection)``.
    """
    if subgroup is None:
        elems = range(x.group.order)
    else:
        if isinstance(subgroup, ConjClass):
            subgroup = subgroup.representative
        if subgroup.group is not x.group:
            raise ValidationError("subgroup of a different group")
        elems = subgroup.members
    proj = [-1] * x.size
    count = 0
    for p in range(x.size):
        if proj[p] < 0:
            for g in elems:
                proj[x.act[g][p]] = count
            count += 1
    return count, tuple(proj)


def product(x: GSet, y: GSet) -> GSet:
    """Diagonal action on pairs; the pair ``(a, b)`` is point ``a*|y| + b``."""
    if x.group is not y.group:
        raise ValidationError("G-sets over different groups")
    m = y.size
    act = [tuple(ra[a] * m + rb[b] for a in range(x.size) for b in range(m))
           for ra, rb in zip(x.act, y.act)]
    return GSet(x.group, act, validate=False, size=x.size * m)


def symmetric_power(x: GSet, k: int, limit=None) -> GSet:
    """Multisets of size ``k``, stored as sorted tuples in lexicographic order."""
    if k < 0:
        raise ValidationError("symmetric power exponent must be non-negative")
    limit = max_points() if limit is None else limit
    count = math.comb(x.size + k - 1, k) if x.size else int(k == 0)
    if count > limit:
        raise CapacityError(f"S^{k} of a {x.size}-point set has {count} points (limit {limit})")
    points = list(itertools.combinations_with_replacement(range(x.size), k))
    index = {ms: i for i, ms in enumerate(points)}
    act = [tuple(index[tuple(sorted(row[p] for p in ms))] for ms in points) for row in x.act]
    return GSet(x.group, act, validate=False, size=len(points))


def orbit_multiplicities(lattice: SubgroupLattice, h, f) -> dict:
    """``{m: l_m}``: number of F-orbits on G/H with exactly ``m`` points."""
    cosets = coset_gset(lattice, h)
    _, proj = quotient(cosets, lattice.resolve(f))
    sizes = Counter(proj)
    return dict(sorted(Counter(sizes.values()).items()))
