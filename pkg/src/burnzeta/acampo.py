"""Equivariant monodromy zeta functions from resolution strata.

Each stratum record carries a multiplicity ``m``, a pair ``(H, Hhat)`` of
isotropy subgroup and kernel of its action on the normal slice, and the
Euler characteristic of the stratum's G-quotient.  The stratum contributes
``(1 - t^{m |Hhat| / |H|})^{-chi(S/G) [G/Hhat]}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .burnside import BurnsideElement, phi
from .errors import StratumError, ValidationError
from .groups import Group, Subgroup, SubgroupLattice, named_group
from .series import CyclotomicFactorization


@dataclass(frozen=True)
class PairClass:
    """``(H, Hhat)`` up to simultaneous conjugation; stored as the least conjugate pair."""

    H: Subgroup
    Hhat: Subgroup

    @classmethod
    def of(cls, H: Subgroup, Hhat: Subgroup) -> "PairClass":
        if H.group is not Hhat.group:
            raise ValidationError("H and Hhat belong to different groups")
        g = H.group
        best = min((tuple(sorted(g.conjugate_set(x, H.members))),
                    tuple(sorted(g.conjugate_set(x, Hhat.members)))) for x in range(g.order))
        return cls(Subgroup(g, best[0]), Subgroup(g, best[1]))

    @property
    def group(self) -> Group:
        return self.H.group

    @property
    def quotient_order(self) -> int:
        return self.H.order // self.Hhat.order if self.Hhat.order else 0

    def problems(self) -> list:
        out = []
        if not self.Hhat <= self.H:
            out.append("Hhat is not a subgroup of H")
            return out
        if not self.Hhat.is_normal_in(self.H):
            out.append("Hhat is not normal in H")
            return out
        if not _quotient_is_cyclic(self.H, self.Hhat):
            out.append("H/Hhat is not cyclic")
        return out

    def label(self, lattice: SubgroupLattice) -> str:
        return f"({lattice.class_of(self.H).name},{lattice.class_of(self.Hhat).name})"


def _quotient_is_cyclic(H: Subgroup, K: Subgroup) -> bool:
    g = H.group
    q = H.order // K.order
    kset = K.memberset
    for h in H.members:
        # order of hK in H/K
        k, x = 1, h
        while x not in kset:
            x = g.product[x][h]
            k += 1
        if k == q:
            return True
    return False


@dataclass(frozen=True)
class StratumRecord:
    m: int
    pair: PairClass
    chi_quotient: int

    @property
    def exponent_of_t(self) -> int:
        return self.m * self.pair.Hhat.order // self.pair.H.order


def validate_stratum(s: StratumRecord) -> None:
    """Raise :class:`StratumError` listing every violated condition."""
    problems = []
    if s.m < 1:
        problems.append(f"multiplicity m={s.m} must be positive")
    problems.extend(s.pair.problems())
    q = s.pair.quotient_order
    if q and s.m >= 1 and s.pair.Hhat <= s.pair.H and s.m % q:
        problems.append(f"|H/Hhat|={q} does not divide m={s.m}")
    if problems:
        raise StratumError(problems)


def stratum_from_total_euler(m: int, pair: PairClass, chi_total: int) -> StratumRecord:
    """Build a record from ``chi(S)`` instead of ``chi(S/G)``: ``chi(S/G) = chi(S) |H| / |G|``."""
    num = chi_total * pair.H.order
    if num % pair.group.order:
        raise ValidationError(f"chi(S)={chi_total} times |H|={pair.H.order} is not divisible by |G|")
    return StratumRecord(m, pair, num // pair.group.order)


@dataclass
class ResolutionData:
    lattice: SubgroupLattice
    strata: list = field(default_factory=list)

    def __post_init__(self):
        keys = set()
        for s in self.strata:
            if s.pair.group is not self.lattice.group:
                raise ValidationError("stratum over a different group")
            key = (s.m, s.pair.H.members, s.pair.Hhat.members)
            if key in keys:
                raise ValidationError(f"stratum (m={s.m}, {s.pair.label(self.lattice)}) listed twice")
            keys.add(key)


def acampo_zeta(data: ResolutionData) -> CyclotomicFactorization:
    lat = data.lattice
    out = CyclotomicFactorization(lattice=lat)
    for s in data.strata:
        validate_stratum(s)
        e = BurnsideElement.basis(lat, lat.class_of(s.pair.Hhat), -s.chi_quotient)
        out = out * CyclotomicFactorization({s.exponent_of_t: e}, lattice=lat)
    return out


def quasihomogeneous_zeta(chi_g: BurnsideElement) -> CyclotomicFactorization:
    """``(1 - t)^{-chi^G(M_f)}`` for monodromy acting as a group element."""
    return CyclotomicFactorization({1: -chi_g}, lattice=chi_g.lattice)


def _s3_subgroups(group: Group):
    lat = group.lattice()
    by_name = {c.name: c.representative for c in lat}
    return by_name["e"], by_name["Z2"], by_name["Z3"], by_name["S3"]


def fermat_s3_strata(k: int, group: Group = None) -> ResolutionData:
    """Strata of ``x^m + y^m + z^m`` (``m = 6k``) under S3 permuting coordinates."""
    if k < 1:
        raise ValidationError("k must be positive")
    group = group or named_group("symmetric", 3)
    e, z2, z3, s3 = _s3_subgroups(group)
    m = 6 * k
    records = [
        StratumRecord(m, PairClass.of(s3, s3), 1),
        StratumRecord(m, PairClass.of(z2, z2), 1 - 6 * k),
        StratumRecord(m, PairClass.of(z2, e), 1),
        StratumRecord(m, PairClass.of(z3, e), 1),
        StratumRecord(m, PairClass.of(e, e), 6 * k * k - 1),
    ]
    return ResolutionData(group.lattice(), records)


def orbifold_reduce(z: CyclotomicFactorization) -> CyclotomicFactorization:
    """Apply the orbifold map to every exponent."""
    return z.map_exponents(phi)
