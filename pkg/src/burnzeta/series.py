"""Power series with Burnside-ring coefficients and the power structure.

Series arithmetic is done in marks coordinates: a Burnside series is turned
into one integer series per conjugacy class, those are multiplied pointwise,
and the result is turned back by the triangular solve.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .burnside import BurnsideElement, RationalBurnside, format_combination, from_marks, marks
from .errors import LatticeMismatchError, RationalExponentError, ValidationError
from .groups import SubgroupLattice
from .gsets import GSet, orbit_multiplicities, symmetric_power
from .rational import RationalFunction, series_binomial_power, series_inverse, series_mul

DEFAULT_ORDER = 16


class BurnsideSeries:
    """``c_0 + c_1 t + ... + c_N t^N`` with ``c_k`` in the Burnside ring."""

    def __init__(self, lattice: SubgroupLattice, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValidationError("a series needs at least the constant term")
        for c in coeffs:
            if c.lattice is not lattice:
                raise LatticeMismatchError("coefficient over a different group")
        self.lattice = lattice
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, lattice, n):
        z = BurnsideElement.zero(lattice)
        return cls(lattice, [BurnsideElement.one(lattice)] + [z] * n)

    @classmethod
    def from_marks_series(cls, lattice, columns) -> "BurnsideSeries":
        """Inverse of :meth:`marks_columns`."""
        n = len(columns[0]) - 1
        return cls(lattice, [from_marks(lattice, [col[k] for col in columns]) for k in range(n + 1)])

    def marks_columns(self) -> list:
        """``columns[j][k]`` = mark at class ``j`` of the ``t^k`` coefficient."""
        rows = [marks(c) for c in self.coeffs]
        return [[r[j] for r in rows] for j in range(len(self.lattice))]

    def truncate(self, n: int) -> "BurnsideSeries":
        if n > self.order:
            raise ValidationError(f"series only known to order {self.order}")
        return BurnsideSeries(self.lattice, self.coeffs[: n + 1])

    def _check(self, other):
        if not isinstance(other, BurnsideSeries):
            raise TypeError("expected a BurnsideSeries")
        if other.lattice is not self.lattice:
            raise LatticeMismatchError("series over different groups")
        return min(self.order, other.order)

    def __eq__(self, other):
        if not isinstance(other, BurnsideSeries):
            return NotImplemented
        n = self._check(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __add__(self, other):
        n = self._check(other)
        return BurnsideSeries(self.lattice, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    def __neg__(self):
        return BurnsideSeries(self.lattice, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        n = self._check(other)
        a, b = self.marks_columns(), other.marks_columns()
        return BurnsideSeries.from_marks_series(self.lattice, [series_mul(x, y, n) for x, y in zip(a, b)])

    def invert(self) -> "BurnsideSeries":
        if self.coeffs[0].unit_multiple() not in (1, -1):
            raise ValidationError("constant term is not a unit")
        n = self.order
        return BurnsideSeries.from_marks_series(
            self.lattice, [series_inverse(col, n) for col in self.marks_columns()])

    def __truediv__(self, other):
        return self * other.invert()

    def substitute_power(self, i: int) -> "BurnsideSeries":
        """``A(t^i)``, keeping the truncation order."""
        n = self.order
        z = BurnsideElement.zero(self.lattice)
        out = [z] * (n + 1)
        for k, c in enumerate(self.coeffs):
            if k * i > n:
                break
            out[k * i] = c
        return BurnsideSeries(self.lattice, out)

    def to_json(self) -> list:
        return [c.to_dict() for c in self.coeffs]

    def __repr__(self):
        return f"BurnsideSeries({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            u = c.unit_multiple()
            txt = str(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if u is not None:
                txt = str(u)
                body = txt if k == 0 else (mono if u == 1 else ("-" + mono if u == -1 else f"{txt} {mono}"))
            elif k == 0:
                body = txt
            else:
                nterms = sum(1 for x in c.coeffs if x)
                body = f"({txt}) {mono}" if nterms > 1 else f"{txt} {mono}"
            parts.append(body)
        return (" + ".join(parts) if parts else "0") + f" + O(t^{self.order + 1})"


def to_marks_series(b: BurnsideSeries, f) -> list:
    """The integer series of marks at class ``f``."""
    j = b.lattice.resolve(f).index
    return [marks(c)[j] for c in b.coeffs]


def sigma_series(x: GSet, n: int = DEFAULT_ORDER, limit=None) -> BurnsideSeries:
    """``1 + [X] t + [S^2 X] t^2 + ...`` by enumerating symmetric powers."""
    from .burnside import burnside_class

    lat = x.lattice
    return BurnsideSeries(lat, [burnside_class(symmetric_power(x, k, limit=limit)) for k in range(n + 1)])


@dataclass
class RationalCoefficientFunction:
    """``(1 - t)^{-[G/H]} = sum_F A_F(t) [G/F]`` with each ``A_F`` a rational function."""

    lattice: SubgroupLattice
    h: int
    coefficients: tuple  # RationalFunction per class

    def __getitem__(self, f) -> RationalFunction:
        return self.coefficients[self.lattice.resolve(f).index]

    def expand(self, n: int) -> BurnsideSeries:
        cols = [a.series(n) for a in self.coefficients]
        return BurnsideSeries(self.lattice, [BurnsideElement(self.lattice, [col[k] for col in cols])
                                             for k in range(n + 1)])

    def denominators(self) -> set:
        return {m for a in self.coefficients for m in a.den}

    def to_json(self) -> dict:
        return {f"G/{c.label}": a.to_json() for c, a in zip(self.lattice, self.coefficients)}

    def __str__(self):
        g = self.lattice.group.name
        terms = []
        for c, a in reversed(list(zip(self.lattice, self.coefficients))):
            if a:
                terms.append(f"{a} [{g}/{c.name}]")
        return " + ".join(terms) if terms else "0"


def binomial_rational_form(lattice: SubgroupLattice, h) -> RationalCoefficientFunction:
    """Exact rational coefficients of ``(1 - t)^{-[G/H]}``.

    For each class F, counting F-fixed points on both sides gives
    ``prod_m (1 - t^m)^{-l_m} = sum_{F' >= F} r[F', F] A_{F'}``
    where ``l_m`` is the number of F-orbits of size m on G/H.  The system is
    triangular in the marks table and is solved from the largest class down.
    """
    cls = lattice.resolve(h)
    key = ("binomial", cls.index)
    cache = lattice.__dict__.setdefault("_series_cache", {})
    if key in cache:
        return cache[key]
    rows = lattice.marks.rows
    k = len(lattice)
    lhs = [RationalFunction.from_binomials({m: -l for m, l in orbit_multiplicities(lattice, cls, f).items()})
           for f in lattice]
    coeffs = [None] * k
    for j in reversed(range(k)):
        rest = lhs[j]
        for i in range(j + 1, k):
            if rows[i][j]:
                rest = rest - coeffs[i] * rows[i][j]
        coeffs[j] = rest.exact_div(rows[j][j]).reduce()
    out = RationalCoefficientFunction(lattice, cls.index, tuple(coeffs))
    cache[key] = out
    return out


def _binomial_marks(lattice: SubgroupLattice, n: int) -> list:
    """``table[i][j]`` = marks at class j of ``(1 - t)^{-[G/H_i]}`` to order n."""
    cache = lattice.__dict__.setdefault("_series_cache", {})
    got = cache.get("binomial_marks")
    if got is not None and got[0] >= n:
        return [[col[: n + 1] for col in row] for row in got[1]]
    table = [binomial_rational_form(lattice, i).expand(n).marks_columns() for i in range(len(lattice))]
    cache["binomial_marks"] = (n, table)
    return table


def _power_columns(cols, e: int, n: int) -> list:
    if e >= 0:
        out = [1] + [0] * n
        for _ in range(e):
            out = series_mul(out, cols, n)
        return out
    inv = series_inverse(cols, n)
    return _power_columns(inv, -e, n)


def one_minus_t_power(b: BurnsideElement, n: int, i: int = 1) -> BurnsideSeries:
    """``(1 - t^i)^{-b}`` for a virtual element ``b``.

    Written as ``(1 - t^i)^{-b+} * ((1 - t^i)^{-b-})^{-1}`` with both parts
    effective, each a product of the binomial series of the orbits.
    """
    lat = b.lattice
    base = _binomial_marks(lat, n // i)
    k = len(lat)
    columns = []
    for j in range(k):
        col = [1] + [0] * (n // i)
        for idx, c in enumerate(b.coeffs):
            if c:
                col = series_mul(col, _power_columns(base[idx][j], c, n // i), n // i)
        # substitute t -> t^i
        full = [0] * (n + 1)
        for kk, v in enumerate(col):
            full[kk * i] = v
        columns.append(full)
    return BurnsideSeries.from_marks_series(lat, columns)


class CyclotomicFactorization:
    """Formal product ``prod_m (1 - t^m)^{e_m}``.

    Exponents are stored with their true sign and may be Burnside elements,
    rational Burnside elements, integers or fractions.
    """

    def __init__(self, exponents: Mapping = None, lattice=None):
        self.lattice = lattice
        self.exponents = {}
        for m, e in (exponents or {}).items():
            m = int(m)
            if m < 1:
                raise ValidationError("binomial exponents need m >= 1")
            if e:
                self.exponents[m] = e
            if isinstance(e, (BurnsideElement, RationalBurnside)):
                if self.lattice is None:
                    self.lattice = e.lattice
                elif e.lattice is not self.lattice:
                    raise LatticeMismatchError("exponents over different groups")

    def __mul__(self, other: "CyclotomicFactorization"):
        out = dict(self.exponents)
        for m, e in other.exponents.items():
            out[m] = out[m] + e if m in out else e
        return CyclotomicFactorization(out, lattice=self.lattice or other.lattice)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicFactorization):
            return NotImplemented
        return self.exponents == other.exponents

    __hash__ = None

    def __bool__(self):
        return True

    def is_trivial(self) -> bool:
        return not self.exponents

    def map_exponents(self, fn) -> "CyclotomicFactorization":
        return CyclotomicFactorization({m: fn(e) for m, e in self.exponents.items()})

    def scale(self, b) -> "CyclotomicFactorization":
        """Multiply every exponent by ``b`` (the power ``Z^b`` of the product)."""
        return CyclotomicFactorization({m: e * b for m, e in self.exponents.items()},
                                       lattice=getattr(b, "lattice", self.lattice))

    def is_integral(self) -> bool:
        for e in self.exponents.values():
            if isinstance(e, RationalBurnside) and not e.is_integral():
                return False
            if isinstance(e, Fraction) and e.denominator != 1:
                return False
        return True

    def items(self):
        return sorted(self.exponents.items(), reverse=True)

    def to_json(self) -> dict:
        factors = []
        for m, e in self.items():
            if isinstance(e, (BurnsideElement, RationalBurnside)):
                ej = e.to_dict()
            elif isinstance(e, Fraction) and e.denominator != 1:
                ej = str(e)
            else:
                ej = int(e)
            factors.append({"m": m, "exponent": ej})
        return {"factors": factors}

    def __repr__(self):
        return f"CyclotomicFactorization({self})"

    def __str__(self):
        if not self.exponents:
            return "1"
        parts = []
        for m, e in self.items():
            b = "(1-t)" if m == 1 else f"(1-t^{m})"
            if isinstance(e, (BurnsideElement, RationalBurnside)):
                txt = format_combination(e.lattice, e.coeffs)
                parts.append(f"{b}^{{{txt}}}")
            elif isinstance(e, Fraction) and e.denominator != 1:
                parts.append(f"{b}^{{{e}}}")
            else:
                parts.append(f"{b}^{int(e)}")
        return " ".join(parts)


def expand(f, n: int = DEFAULT_ORDER, lattice=None) -> BurnsideSeries:
    """Truncated series of a factorization or of a rational coefficient family."""
    if isinstance(f, RationalCoefficientFunction):
        return f.expand(n)
    if not isinstance(f, CyclotomicFactorization):
        raise TypeError("expand takes a CyclotomicFactorization or RationalCoefficientFunction")
    lat = f.lattice or lattice
    if lat is None:
        raise ValidationError("factorization with integer exponents needs a lattice to expand over")
    out = BurnsideSeries.one(lat, n)
    for m, e in f.items():
        if isinstance(e, RationalBurnside):
            if not e.is_integral():
                raise RationalExponentError(f"exponent {e} at (1-t^{m}) is not integral")
            e = e.to_integral()
        elif isinstance(e, Fraction):
            if e.denominator != 1:
                raise RationalExponentError(f"exponent {e} at (1-t^{m}) is not integral")
            e = int(e)
        if isinstance(e, int):
            e = BurnsideElement.one(lat).scale(e)
        out = out * one_minus_t_power(-e, n, m)
    return out


def factorize(a: BurnsideSeries) -> CyclotomicFactorization:
    """Exponents ``b_i`` with ``A(t) = prod_i (1 - t^i)^{-b_i}`` up to the truncation order."""
    if a.coeffs[0].unit_multiple() != 1:
        raise ValidationError("power structure needs constant term 1")
    lat, n = a.lattice, a.order
    residual = a
    exps = {}
    for i in range(1, n + 1):
        b = residual.coeffs[i]
        if b:
            exps[i] = -b
            residual = residual * one_minus_t_power(-b, n, i)
    return CyclotomicFactorization(exps, lattice=lat)


def power(a: BurnsideSeries, m, n: int = None) -> BurnsideSeries:
    """The power-structure series ``A(t)^m`` for ``A(0) = 1`` and ``m`` in the Burnside ring."""
    n = a.order if n is None else min(n, a.order)
    a = a.truncate(n)
    if isinstance(m, int):
        m = BurnsideElement.one(a.lattice).scale(m)
    fac = factorize(a)
    return expand(fac.scale(m), n)


def integer_series(f: CyclotomicFactorization, n: int) -> list:
    """Expansion of a factorization with plain integer exponents."""
    out = [1] + [0] * n
    for m, e in f.items():
        if isinstance(e, Fraction):
            if e.denominator != 1:
                raise RationalExponentError(f"exponent {e} at (1-t^{m}) is not integral")
            e = int(e)
        out = series_mul(out, series_binomial_power(m, e, n), n)
    return out


def orbit_binomial_product(lattice: SubgroupLattice, h, f, n: int) -> list:
    """``prod_m (1 - t^m)^{-l_m}`` for the F-orbit sizes on G/H."""
    fac = CyclotomicFactorization({m: -l for m, l in orbit_multiplicities(lattice, h, f).items()})
    return integer_series(fac, n)


def denominator_counts(r: RationalCoefficientFunction) -> Counter:
    c = Counter()
    for a in r.coefficients:
        c.update(a.den)
    return c
