"""Equivariant self-maps of finite G-sets and their zeta functions.

The Lefschetz number of a self-map of a finite set is its number of fixed
points.  ``L^G`` counts fixed points as a G-set; ``L~^G`` counts the orbits
sent to themselves.  Zeta functions come out as exact products of binomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .burnside import BurnsideElement, RationalBurnside, burnside_class, character, divide, phi
from .errors import ValidationError
from .groups import lcm
from .gsets import GSet, isotropy_stratum
from .series import CyclotomicFactorization, expand


def divisors(m: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def compose_power(images: Sequence[int], m: int) -> tuple:
    """``f^m`` by repeated squaring."""
    result = tuple(range(len(images)))
    base = tuple(images)
    while m:
        if m & 1:
            result = tuple(base[x] for x in result)
        base = tuple(base[x] for x in base)
        m >>= 1
    return result


def exact_periods(images: Sequence[int]) -> dict:
    """``{x: period}`` for the periodic points of a self-map."""
    n = len(images)
    state = [0] * n  # 0 new, 1 on current path, 2 done
    periods = {}
    for start in range(n):
        if state[start]:
            continue
        path, x = [], start
        while not state[x]:
            state[x] = 1
            path.append(x)
            x = images[x]
        if state[x] == 1:
            cyc = path[path.index(x):]
            for y in cyc:
                periods[y] = len(cyc)
        for y in path:
            state[y] = 2
    return periods


class EquivariantMap:
    """A map ``phi: X -> X`` with ``phi(g x) = g phi(x)``."""

    def __init__(self, domain: GSet, images: Sequence[int], validate: bool = True):
        self.domain = domain
        self.images = tuple(int(y) for y in images)
        if len(self.images) != domain.size or any(not 0 <= y < domain.size for y in self.images):
            raise ValidationError("images must map the point set into itself")
        if validate:
            for g, row in enumerate(domain.act):
                for x in range(domain.size):
                    if row[self.images[x]] != self.images[row[x]]:
                        raise ValidationError(f"map is not equivariant at g={g}, x={x}")

    def __repr__(self):
        return f"EquivariantMap({self.domain!r}, {list(self.images)})"

    @property
    def group(self):
        return self.domain.group

    @property
    def lattice(self):
        return self.domain.lattice

    def iterate(self, m: int) -> tuple:
        return compose_power(self.images, m)

    def orbit_map(self) -> tuple:
        """The induced self-map of X/G on orbit indices."""
        proj = self.domain.orbits.projection
        return tuple(proj[self.images[orb[0]]] for orb, _ in self.domain.orbits.orbits)

    def restrict(self, points) -> "EquivariantMap":
        pts = set(points)
        if any(self.images[x] not in pts for x in pts):
            raise ValidationError("subset is not mapped into itself")
        sub, new = self.domain.restrict(pts)
        return EquivariantMap(sub, [new[self.images[x]] for x in sorted(pts)], validate=False)

    def preserves_strata(self) -> bool:
        orbs = self.domain.orbits
        cls = [orbs.orbits[orbs.projection[x]][1] for x in range(self.domain.size)]
        return all(cls[self.images[x]] == cls[x] for x in range(self.domain.size))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)


def lefschetz_G(phi_map: EquivariantMap, m: int) -> BurnsideElement:
    """Class of the G-invariant set ``Fix(phi^m)``."""
    it = phi_map.iterate(m)
    fixed = [x for x in range(len(it)) if it[x] == x]
    sub, _ = phi_map.domain.restrict(fixed)
    return burnside_class(sub)


def lefschetz_tilde_G(phi_map: EquivariantMap, m: int) -> BurnsideElement:
    """Sum of ``[O]`` over the orbits O with ``phi^m(O) = O``."""
    omap = compose_power(phi_map.orbit_map(), m)
    lat = phi_map.lattice
    c = [0] * len(lat)
    for o, (_, cls) in enumerate(phi_map.domain.orbits.orbits):
        if omap[o] == o:
            c[cls] += 1
    return BurnsideElement(lat, c)


def lefschetz_tilde_by_strata(phi_map: EquivariantMap, m: int) -> BurnsideElement:
    """``sum_H L(phi^m on X^(H)/G) [G/H]``; agrees with :func:`lefschetz_tilde_G`
    when ``phi`` preserves isotropy strata (e.g. for bijections)."""
    lat = phi_map.lattice
    omap = compose_power(phi_map.orbit_map(), m)
    orbits = phi_map.domain.orbits.orbits
    c = []
    for h in lat:
        stratum = [o for o, (_, cls) in enumerate(orbits) if cls == h.index]
        c.append(sum(1 for o in stratum if omap[o] == o))
    return BurnsideElement(lat, c)


@dataclass
class LefschetzSequence:
    """``values[m-1] = L(phi^m)`` for ``m = 1..M``; every cycle length is at most ``M``."""

    values: list
    period: int
    tilde: bool = False

    def __getitem__(self, m: int):
        if m < 1:
            raise IndexError("Lefschetz numbers are indexed from 1")
        if m <= len(self.values):
            return self.values[m - 1]
        # no cycle is longer than M, so L(phi^m) = sum of s_d over d | m, d <= M
        s = s_sequence(self)
        total = self.values[0] * 0
        for d in divisors(m):
            if d in s:
                total = total + s[d]
        return total


def _cycle_lengths(images) -> set:
    return set(exact_periods(images).values())


def lefschetz_sequence(phi_map: EquivariantMap, tilde: bool = False) -> LefschetzSequence:
    base = phi_map.orbit_map() if tilde else phi_map.images
    lengths = _cycle_lengths(base)
    top = max(lengths) if lengths else 1
    fn = lefschetz_tilde_G if tilde else lefschetz_G
    return LefschetzSequence([fn(phi_map, m) for m in range(1, top + 1)], lcm(lengths), tilde)


def s_sequence(seq: LefschetzSequence) -> dict:
    """Moebius inversion of ``L(phi^m) = sum_{d | m} s_d``; zero terms are dropped."""
    out = {}
    for m in range(1, len(seq.values) + 1):
        total = None
        for d in divisors(m):
            mu = mobius(m // d)
            if mu:
                term = seq[d] * mu
                total = term if total is None else total + term
        if total:
            out[m] = total
    return out


def direct_period_counts(phi_map: EquivariantMap, tilde: bool = False) -> dict:
    """``s_m`` by classifying points (or orbits, when ``tilde``) by exact period."""
    lat = phi_map.lattice
    orbits = phi_map.domain.orbits.orbits
    out = {}
    if tilde:
        for o, p in exact_periods(phi_map.orbit_map()).items():
            out.setdefault(p, [0] * len(lat))[orbits[o][1]] += 1
    else:
        # each periodic G-orbit contributes its full orbit; count orbits, not points
        proj = phi_map.domain.orbits.projection
        seen = set()
        for x, p in exact_periods(phi_map.images).items():
            o = proj[x]
            if o not in seen:
                seen.add(o)
                out.setdefault(p, [0] * len(lat))[orbits[o][1]] += 1
    return {m: BurnsideElement(lat, c) for m, c in sorted(out.items())}


def divisibility_check(s: BurnsideElement, m: int) -> BurnsideElement:
    """``s / m``; raises :class:`NotDivisibleError` naming the offending class."""
    return divide(s, m)


def zeta_tilde_G(phi_map: EquivariantMap) -> CyclotomicFactorization:
    s = s_sequence(lefschetz_sequence(phi_map, tilde=True))
    return CyclotomicFactorization({m: -divisibility_check(v, m) for m, v in s.items()},
                                   lattice=phi_map.lattice)


def zeta_G(phi_map: EquivariantMap) -> CyclotomicFactorization:
    """The point-counting variant; exponents ``-s_m/m`` are only rational in general."""
    s = s_sequence(lefschetz_sequence(phi_map, tilde=False))
    return CyclotomicFactorization(
        {m: RationalBurnside(v.lattice, [Fraction(-c, m) for c in v.coeffs]) for m, v in s.items()},
        lattice=phi_map.lattice)


def zeta_nonequivariant(images: Sequence[int]) -> CyclotomicFactorization:
    """``prod (1 - t^m)^{-s_m/m}`` for a self-map of ``{0..n-1}``."""
    images = tuple(images)
    n = len(images)
    if any(not 0 <= y < n for y in images):
        raise ValidationError("images must map the point set into itself")
    lengths = _cycle_lengths(images)
    top = max(lengths) if lengths else 0
    fix = [None] + [sum(1 for x, y in enumerate(compose_power(images, m)) if x == y) for m in range(1, top + 1)]
    exps = {}
    for m in range(1, top + 1):
        s = sum(mobius(m // d) * fix[d] for d in divisors(m))
        if s:
            if s % m:
                raise AssertionError("exact-period count not divisible by the period")
            exps[m] = -(s // m)
    return CyclotomicFactorization(exps)


def zeta_orb(phi_map: EquivariantMap, variant: str = "tilde") -> CyclotomicFactorization:
    """Push the exponents through the orbifold map (integers or fractions)."""
    if variant not in ("tilde", "plain"):
        raise ValidationError("variant must be 'tilde' or 'plain'")
    s = s_sequence(lefschetz_sequence(phi_map, tilde=variant == "tilde"))
    out = {}
    for m, v in s.items():
        e = Fraction(-phi(v), m)
        out[m] = int(e) if e.denominator == 1 else e
    return CyclotomicFactorization(out)


def character_series(z: CyclotomicFactorization, n: int, lattice=None) -> list:
    """Expand and apply the permutation character to every coefficient."""
    return [character(c) for c in expand(z, n, lattice=lattice).coeffs]


def stratum_orbit_maps(phi_map: EquivariantMap) -> dict:
    """For a stratum-preserving map: class index -> induced self-map of X^(H)/G."""
    if not phi_map.preserves_strata():
        raise ValidationError("map does not preserve the isotropy strata")
    x = phi_map.domain
    omap = phi_map.orbit_map()
    orbits = x.orbits.orbits
    out = {}
    for h in x.lattice:
        if not isotropy_stratum(x, h):
            continue
        idx = [o for o, (_, cls) in enumerate(orbits) if cls == h.index]
        local = {o: i for i, o in enumerate(idx)}
        out[h.index] = tuple(local[omap[o]] for o in idx)
    return out
