"""The Burnside ring: virtual G-sets as integer combinations of ``[G/H]``.

Arithmetic goes through the mark homomorphism, which embeds the ring into a
product of copies of the integers (one per conjugacy class of subgroups).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import LatticeMismatchError, NonIntegralMarksError, NotDivisibleError, ValidationError
from .groups import SubgroupLattice, commuting_pairs, element_classes
from .gsets import GSet, coset_gset, isotropy_stratum


def _format_coeff(c) -> str:
    return str(c)


def format_combination(lattice: SubgroupLattice, coeffs, bracket=True) -> str:
    """``3[S3/Z2] + 2[S3/e]`` (largest classes first)."""
    gname = lattice.group.name
    parts = []
    for i in reversed(range(len(coeffs))):
        c = coeffs[i]
        if c == 0:
            continue
        term = f"[{gname}/{lattice[i].name}]"
        if c == 1:
            s = term
        elif c == -1:
            s = "-" + term
        else:
            s = f"{_format_coeff(c)}{term}"
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class BurnsideElement:
    """An element of the Burnside ring of ``lattice.group``."""

    __slots__ = ("lattice", "coeffs")

    def __init__(self, lattice: SubgroupLattice, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != len(lattice):
            raise ValidationError(f"expected {len(lattice)} coefficients, got {len(coeffs)}")
        self.lattice = lattice
        self.coeffs = coeffs

    @classmethod
    def zero(cls, lattice):
        return cls(lattice, [0] * len(lattice))

    @classmethod
    def one(cls, lattice):
        return cls.basis(lattice, len(lattice) - 1)

    @classmethod
    def basis(cls, lattice, h, coeff=1):
        i = lattice.resolve(h).index
        c = [0] * len(lattice)
        c[i] = coeff
        return cls(lattice, c)

    @classmethod
    def from_mapping(cls, lattice, data: Mapping):
        c = [0] * len(lattice)
        for key, val in data.items():
            c[lattice.resolve(key).index] += int(val)
        return cls(lattice, c)

    def _coerce(self, other):
        if isinstance(other, BurnsideElement):
            if other.lattice is not self.lattice:
                raise LatticeMismatchError("Burnside elements over different groups")
            return other
        if isinstance(other, int):
            return BurnsideElement.one(self.lattice).scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = BurnsideElement.one(self.lattice).scale(other)
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return other.lattice is self.lattice and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BurnsideElement(self.lattice, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return BurnsideElement(self.lattice, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int):
        return BurnsideElement(self.lattice, [k * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def positive_part(self):
        return BurnsideElement(self.lattice, [max(c, 0) for c in self.coeffs])

    def negative_part(self):
        return BurnsideElement(self.lattice, [max(-c, 0) for c in self.coeffs])

    def unit_multiple(self):
        """``n`` if this element is ``n[G/G]``, else ``None``."""
        if any(self.coeffs[:-1]):
            return None
        return self.coeffs[-1]

    def to_dict(self) -> dict:
        return {f"G/{c.label}": v for c, v in zip(self.lattice, self.coeffs)}

    def __repr__(self):
        return f"BurnsideElement({format_combination(self.lattice, self.coeffs)})"

    def __str__(self):
        return format_combination(self.lattice, self.coeffs)


class RationalBurnside:
    """Burnside element with exact rational coefficients."""

    __slots__ = ("lattice", "coeffs")

    def __init__(self, lattice, coeffs):
        self.lattice = lattice
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def of(cls, b: BurnsideElement):
        return cls(b.lattice, b.coeffs)

    def __eq__(self, other):
        if isinstance(other, BurnsideElement):
            other = RationalBurnside.of(other)
        if not isinstance(other, RationalBurnside):
            return NotImplemented
        return other.lattice is self.lattice and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, BurnsideElement):
            other = RationalBurnside.of(other)
        if other.lattice is not self.lattice:
            raise LatticeMismatchError("Burnside elements over different groups")
        return RationalBurnside(self.lattice, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return RationalBurnside(self.lattice, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return RationalBurnside(self.lattice, [k * a for a in self.coeffs])

    def __bool__(self):
        return any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integral(self) -> BurnsideElement:
        if not self.is_integral():
            raise ValidationError(f"{self} has non-integer coefficients")
        return BurnsideElement(self.lattice, [int(c) for c in self.coeffs])

    def to_dict(self):
        return {f"G/{c.label}": str(v) for c, v in zip(self.lattice, self.coeffs)}

    def __repr__(self):
        return f"RationalBurnside({self})"

    def __str__(self):
        return format_combination(self.lattice, self.coeffs)


def marks(b: BurnsideElement) -> tuple:
    """Marks vector: number of (virtual) fixed points of each class representative."""
    rows = b.lattice.marks.rows
    k = len(rows)
    return tuple(sum(b.coeffs[i] * rows[i][j] for i in range(j, k)) for j in range(k))


def from_marks(lattice: SubgroupLattice, values) -> BurnsideElement:
    """Invert :func:`marks` by triangular substitution from the top class down."""
    rows = lattice.marks.rows
    k = len(rows)
    values = [int(v) for v in values]
    if len(values) != k:
        raise ValidationError(f"marks vector needs {k} entries")
    coeffs = [0] * k
    for j in reversed(range(k)):
        rest = values[j] - sum(coeffs[i] * rows[i][j] for i in range(j + 1, k))
        q, r = divmod(rest, rows[j][j])
        if r:
            raise NonIntegralMarksError(
                f"marks vector {values} is not realizable (class {lattice[j].label})",
                lattice[j].label, r)
        coeffs[j] = q
    return BurnsideElement(lattice, coeffs)


def mul(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    if a.lattice is not b.lattice:
        raise LatticeMismatchError("Burnside elements over different groups")
    return from_marks(a.lattice, [x * y for x, y in zip(marks(a), marks(b))])


def burnside_class(x: GSet) -> BurnsideElement:
    """Sum of ``[G/G_p]`` over the orbits of ``x``."""
    lat = x.lattice
    c = [0] * len(lat)
    for _, cls in x.orbits.orbits:
        c[cls] += 1
    return BurnsideElement(lat, c)


def equivariant_euler(x: GSet) -> BurnsideElement:
    """``sum_H |X^(H)| |H| / |G| [G/H]`` computed stratum by stratum."""
    lat = x.lattice
    g = x.group.order
    coeffs = []
    for cls in lat:
        n = len(isotropy_stratum(x, cls)) * cls.order
        if n % g:
            raise AssertionError("isotropy stratum size is not a multiple of the orbit length")
        coeffs.append(n // g)
    return BurnsideElement(lat, coeffs)


def equivariant_euler_from_strata(lattice: SubgroupLattice, data) -> BurnsideElement:
    """``sum chi(X^(H)/G) [G/H]`` from ``(class, chi of the quotient stratum)`` pairs."""
    c = [0] * len(lattice)
    seen = set()
    for h, chi in data:
        i = lattice.resolve(h).index
        if i in seen:
            raise ValidationError(f"class {lattice[i].label} listed twice")
        seen.add(i)
        c[i] = int(chi)
    return BurnsideElement(lattice, c)


def cyclic_class_indices(lattice: SubgroupLattice) -> list:
    """For each element class: index of the class of the cyclic subgroup it generates."""
    g = lattice.group
    return [lattice.class_index(g.closure([cls[0]])) for cls in element_classes(g)]


def character(b: BurnsideElement) -> tuple:
    """Permutation character on element classes (in :func:`element_classes` order)."""
    m = marks(b)
    return tuple(m[i] for i in cyclic_class_indices(b.lattice))


def orbifold_euler(x: GSet) -> int:
    """``(1/|G|) * sum over commuting pairs (g, h)`` of the points fixed by both."""
    group = x.group
    total = 0
    for a, b in commuting_pairs(group):
        ra, rb = x.act[a], x.act[b]
        total += sum(1 for p in range(x.size) if ra[p] == p and rb[p] == p)
    q, r = divmod(total, group.order)
    if r:
        raise AssertionError("orbifold Euler characteristic is not an integer")
    return q


@lru_cache(maxsize=None)
def _phi_basis(lattice: SubgroupLattice) -> tuple:
    return tuple(orbifold_euler(coset_gset(lattice, c)) for c in lattice)


def phi(b) -> int | Fraction:
    """Additive map to the integers sending ``[G/H]`` to the orbifold Euler characteristic of G/H."""
    basis = _phi_basis(b.lattice)
    total = sum(c * v for c, v in zip(b.coeffs, basis))
    if isinstance(total, Fraction) and total.denominator == 1:
        return int(total)
    return total


def divide(b: BurnsideElement, m: int) -> BurnsideElement:
    """Exact coefficientwise division; raise if some coefficient is not a multiple of ``m``."""
    out = []
    for cls, c in zip(b.lattice, b.coeffs):
        q, r = divmod(c, m)
        if r:
            raise NotDivisibleError(m, f"G/{cls.label}", r)
        out.append(q)
    return BurnsideElement(b.lattice, out)
