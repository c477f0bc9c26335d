"""Finite groups as multiplication tables, their subgroups and tables of marks.

Elements of a group are the integers ``0 .. order-1`` with ``0`` the identity.
Permutation groups compose right to left: ``(p*q)(i) = p[q[i]]``, so that the
natural action on points is a left action.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapacityError, ValidationError

DEFAULT_MAX_ORDER = 64


def _compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[i] for i in q)


def _check_permutation(perm, degree: int) -> tuple:
    perm = tuple(int(v) for v in perm)
    if len(perm) != degree or sorted(perm) != list(range(degree)):
        raise ValidationError(f"not a permutation of 0..{degree - 1}: {list(perm)}")
    return perm


class Group:
    """A finite group given by its full multiplication table.

    ``product[a][b]`` is the index of ``a*b``.  ``generators`` lists element
    indices generating the group; ``parents`` records, for every element
    other than the identity, a pair ``(p, k)`` with ``element = p * generators[k]``
    (used to extend actions given on generators only).
    """

    def __init__(self, product, name=None, generators=(), parents=None,
                 permutations=None, validate=True, ref=None):
        self.ref = ref
        self.product = tuple(tuple(row) for row in product)
        self.order = len(self.product)
        if self.order == 0:
            raise ValidationError("a group has at least one element")
        self.name = name or "G"
        self.generators = tuple(generators)
        self.parents = parents
        self.permutations = permutations
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.product[a][b] == 0:
                    inv[a] = b
                    break
        if any(v is None for v in inv):
            raise ValidationError("multiplication table has no inverses")
        self.inverse = tuple(inv)
        if validate:
            self.check_axioms()

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self.product[self.product[g][h]][self.inverse[g]]

    def check_axioms(self):
        n, p = self.order, self.product
        for a in range(n):
            if p[0][a] != a or p[a][0] != a:
                raise ValidationError("element 0 is not a two-sided identity")
            if p[a][self.inverse[a]] != 0 or p[self.inverse[a]][a] != 0:
                raise ValidationError(f"inverse table inconsistent at {a}")
        for a in range(n):
            pa = p[a]
            for b in range(n):
                ab = pa[b]
                pab, pb = p[ab], p[b]
                for c in range(n):
                    if pab[c] != pa[pb[c]]:
                        raise ValidationError(f"not associative at ({a}, {b}, {c})")

    @cached_property
    def is_abelian(self) -> bool:
        p = self.product
        return all(p[a][b] == p[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.product[x][a]
            k += 1
        return k

    def closure(self, gens: Iterable[int]) -> frozenset:
        """The subgroup generated by ``gens``."""
        gens = [g for g in set(gens) if g != 0]
        elems = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                row = self.product[a]
                for s in gens:
                    c = row[s]
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(elems)

    def conjugate_set(self, g: int, members: Iterable[int]) -> frozenset:
        return frozenset(self.conj(g, h) for h in members)

    def lattice(self, max_order: int = DEFAULT_MAX_ORDER) -> "SubgroupLattice":
        """The (cached) lattice of conjugacy classes of subgroups."""
        lat = self.__dict__.get("_lattice")
        if lat is None:
            lat = SubgroupLattice(self, max_order=max_order)
            self.__dict__["_lattice"] = lat
        return lat


def group_from_generators(degree: int, generators: Sequence[Sequence[int]], name=None) -> Group:
    """Abstract group generated by permutations of ``0..degree-1``.

    Elements are numbered in breadth-first order of the closure; element 0 is
    the identity permutation.
    """
    if degree < 1:
        raise ValidationError("degree must be positive")
    gens = [_check_permutation(g, degree) for g in generators]
    ident = tuple(range(degree))
    perms = [ident]
    index = {ident: 0}
    parents = [None]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for k, s in enumerate(gens):
                c = _compose(p, s)
                if c not in index:
                    index[c] = len(perms)
                    perms.append(c)
                    parents.append((index[p], k))
                    nxt.append(c)
        frontier = nxt
    table = [[index[_compose(p, q)] for q in perms] for p in perms]
    gen_idx = tuple(index[s] for s in gens)
    # composition of permutations is associative; no need for the O(n^3) check
    return Group(table, name=name, generators=gen_idx, parents=tuple(parents),
                 permutations=tuple(perms), validate=False,
                 ref={"degree": degree, "generators": [list(s) for s in gens]})


def named_group(kind: str, n: int) -> Group:
    """``cyclic`` (order n), ``symmetric`` (order n!) or ``dihedral`` (order 2n)."""
    g = _named_group(kind.lower(), n)
    g.ref = {"kind": kind.lower(), "n": n}
    return g


def _named_group(kind: str, n: int) -> Group:
    if n < 1:
        raise ValidationError("n must be positive")
    if kind == "cyclic":
        gens = [[(i + 1) % n for i in range(n)]] if n > 1 else []
        return group_from_generators(n, gens, name=f"Z{n}")
    if kind == "symmetric":
        if n == 1:
            return group_from_generators(1, [], name="S1")
        swap = [1, 0] + list(range(2, n))
        cycle = [(i + 1) % n for i in range(n)]
        return group_from_generators(n, [swap, cycle], name=f"S{n}")
    if kind == "dihedral":
        if n < 2:
            raise ValidationError("dihedral groups need n >= 2")
        if n == 2:
            # the action on a 2-gon is not faithful; use the Klein four-group on 4 points
            return group_from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]], name="D2")
        rot = [(i + 1) % n for i in range(n)]
        refl = [(-i) % n for i in range(n)]
        return group_from_generators(n, [rot, refl], name=f"D{n}")
    raise ValidationError(f"unknown group kind {kind!r}")


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: Group
    members: tuple  # sorted element indices

    @classmethod
    def of(cls, group: Group, members: Iterable[int]) -> "Subgroup":
        ms = tuple(sorted(set(int(m) for m in members)))
        if not ms or ms[0] != 0:
            raise ValidationError("a subgroup must contain the identity")
        if any(not 0 <= m < group.order for m in ms):
            raise ValidationError("subgroup element out of range")
        s = set(ms)
        for a in ms:
            if group.inverse[a] not in s or any(group.product[a][b] not in s for b in ms):
                raise ValidationError(f"{list(ms)} is not closed under the group operations")
        return cls(group, ms)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def memberset(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, g):
        return g in self.memberset

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.group is self.group
                and other.members == self.members)

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other):
        return self.memberset <= other.memberset

    def conjugate(self, g: int) -> "Subgroup":
        return Subgroup(self.group, tuple(sorted(self.group.conjugate_set(g, self.members))))

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, tuple(sorted(self.memberset & other.memberset)))

    def is_normal_in(self, other: "Subgroup") -> bool:
        if not self <= other:
            return False
        return all(self.group.conjugate_set(g, self.members) == self.memberset
                   for g in other.members)

    def is_cyclic(self) -> bool:
        return any(self.group.element_order(g) == self.order for g in self.members)


@dataclass(eq=False)
class ConjClass:
    index: int
    representative: Subgroup
    conjugates: list
    label: str
    name: str = ""

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def size(self) -> int:
        return len(self.conjugates)

    def __repr__(self):
        return f"ConjClass({self.label}={self.name}, |H|={self.order}, {self.size} conjugates)"


def _subgroup_name(group: Group, members: frozenset) -> str:
    n = len(members)
    if n == 1:
        return "e"
    if n == group.order:
        return group.name
    sub_abelian = all(group.product[a][b] == group.product[b][a] for a in members for b in members)
    orders = [group.element_order(g) for g in members]
    if max(orders) == n:
        return f"Z{n}"
    if sub_abelian:
        if n == 4:
            return "Z2xZ2"
        return f"Ab{n}"
    if n == 6:
        return "S3"
    if n == 8:
        return "D4" if orders.count(2) == 5 else "Q8"
    if n == 12 and orders.count(2) == 3 and orders.count(3) == 8:
        return "A4"
    return f"H{n}"


class SubgroupLattice:
    """All conjugacy classes of subgroups of a group, canonically ordered.

    Classes are sorted by subgroup order, ties broken by the lexicographically
    least member tuple among the conjugates; that least conjugate is the
    class representative.
    """

    def __init__(self, group: Group, max_order: int = DEFAULT_MAX_ORDER):
        if group.order > max_order:
            raise CapacityError(f"group order {group.order} exceeds the bound {max_order}")
        self.group = group
        subgroups = _all_subgroups(group)
        seen = {}
        classes = []
        for s in subgroups:
            if s in seen:
                continue
            conj = {group.conjugate_set(g, s) for g in range(group.order)}
            keys = sorted(tuple(sorted(c)) for c in conj)
            for c in conj:
                seen[c] = True
            classes.append(keys)
        classes.sort(key=lambda keys: (len(keys[0]), keys[0]))
        self.classes = []
        self._index = {}
        names = [_subgroup_name(group, frozenset(keys[0])) for keys in classes]
        counts = {}
        for nm in names:
            counts[nm] = counts.get(nm, 0) + 1
        used = {}
        for i, keys in enumerate(classes):
            nm = names[i]
            if counts[nm] > 1:
                used[nm] = used.get(nm, 0) + 1
                nm = nm + "'" * (used[nm] - 1)
            conjs = [Subgroup(group, k) for k in keys]
            self.classes.append(ConjClass(i, conjs[0], conjs, f"H{i}", nm))
            for k in keys:
                self._index[frozenset(k)] = i
        k = len(self.classes)
        # leq[j][i] == True  iff  class j <= class i (a conjugate of H_j lies in H_i)
        self.leq = [[False] * k for _ in range(k)]
        for j, cj in enumerate(self.classes):
            for i, ci in enumerate(self.classes):
                rep = ci.representative.memberset
                if cj.order <= ci.order and ci.order % cj.order == 0:
                    self.leq[j][i] = any(c.memberset <= rep for c in cj.conjugates)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i) -> ConjClass:
        return self.classes[i]

    @property
    def trivial(self) -> ConjClass:
        return self.classes[0]

    @property
    def whole(self) -> ConjClass:
        return self.classes[-1]

    def class_index(self, members: Iterable[int]) -> int:
        """Index of the class containing the subgroup with these members."""
        key = frozenset(members)
        try:
            return self._index[key]
        except KeyError:
            raise ValidationError(f"{sorted(key)} is not a subgroup of {self.group.name}") from None

    def class_of(self, sub) -> ConjClass:
        if isinstance(sub, Subgroup):
            if sub.group is not self.group:
                raise ValidationError("subgroup belongs to a different group")
            sub = sub.members
        return self.classes[self.class_index(sub)]

    def resolve(self, ref) -> ConjClass:
        """Look up a class by ConjClass, index, label (``H2``, ``G/H2``) or name."""
        if isinstance(ref, ConjClass):
            if ref.index < len(self.classes) and self.classes[ref.index] is ref:
                return ref
            raise ValidationError(f"{ref!r} is not a class of this lattice")
        if isinstance(ref, int):
            if 0 <= ref < len(self.classes):
                return self.classes[ref]
            raise ValidationError(f"class index {ref} out of range")
        if isinstance(ref, Subgroup):
            return self.class_of(ref)
        text = str(ref).strip()
        if text.startswith("G/"):
            text = text[2:]
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        if "/" in text:
            text = text.split("/", 1)[1]
        aliases = {"trivial": 0, "1": 0, "<e>": 0, "whole": len(self.classes) - 1}
        if text in aliases:
            return self.classes[aliases[text]]
        for c in self.classes:
            if text == c.label or text == c.name:
                return c
        if text.isdigit():
            return self.resolve(int(text))
        raise ValidationError(f"no subgroup class named {ref!r} in {self.group.name}")

    def le(self, a, b) -> bool:
        return self.leq[self.resolve(a).index][self.resolve(b).index]

    @cached_property
    def marks(self) -> "TableOfMarks":
        return table_of_marks(self)


def _all_subgroups(group: Group) -> list:
    """Every subgroup, grown from cyclic subgroups by joins."""
    cyclic = sorted({group.closure([g]) for g in range(group.order)}, key=lambda s: (len(s), sorted(s)))
    subs = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyclic:
                if c <= s:
                    continue
                j = group.closure(s | c)
                if j not in subs:
                    subs.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def subgroup_lattice(group: Group, max_order: int = DEFAULT_MAX_ORDER) -> SubgroupLattice:
    return group.lattice(max_order=max_order)


@dataclass(frozen=True)
class TableOfMarks:
    """``rows[i][j]`` = number of fixed points of ``H_j`` on ``G/H_i``."""

    lattice: SubgroupLattice = field(repr=False)
    rows: tuple

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def table_of_marks(lattice: SubgroupLattice) -> TableOfMarks:
    group = lattice.group
    k = len(lattice)
    rows = []
    for ci in lattice:
        big = ci.representative.memberset
        row = []
        for cj in lattice:
            small = cj.representative.members
            # x H_i is fixed by H_j  iff  x^-1 H_j x <= H_i
            count = sum(1 for x in range(group.order)
                        if all(group.conj(group.inverse[x], f) in big for f in small))
            row.append(count // ci.order)
        rows.append(tuple(row))
    for i in range(k):
        if rows[i][i] <= 0:
            raise AssertionError("table of marks has a non-positive diagonal entry")
        for j in range(k):
            if (rows[i][j] != 0) != lattice.leq[j][i]:
                raise AssertionError("table of marks support differs from the subconjugacy order")
            if rows[i][j] and j > i:
                raise AssertionError("table of marks is not lower triangular")
    return TableOfMarks(lattice, tuple(rows))


def element_classes(group: Group) -> list:
    """Conjugacy classes of elements, ordered by (element order, least member)."""
    seen = set()
    classes = []
    for g in range(group.order):
        if g in seen:
            continue
        cls = tuple(sorted({group.conj(x, g) for x in range(group.order)}))
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda c: (group.element_order(c[0]), c[0]))
    return classes


def commuting_pairs(group: Group):
    p = group.product
    return [(a, b) for a, b in itertools.product(range(group.order), repeat=2) if p[a][b] == p[b][a]]


def lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
