"""Integer polynomials and rational functions whose denominators are products
of binomials ``(1 - t^m)``.

Polynomials are tuples of integer coefficients, lowest degree first.  A
denominator is kept as a multiset of exponents ``m`` and is never expanded,
so cancellations such as ``(1 + t^2 + t^4)(1 - t^2) = 1 - t^6`` stay exact.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import ValidationError


def trim(p: Iterable[int]) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(p, q) -> tuple:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def pneg(p) -> tuple:
    return tuple(-c for c in p)


def psub(p, q) -> tuple:
    return padd(p, pneg(q))


def pscale(p, k: int) -> tuple:
    return trim(k * c for c in p)


def pmul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def binomial(m: int) -> tuple:
    """The polynomial ``1 - t^m``."""
    return (1,) + (0,) * (m - 1) + (-1,)


def times_binomial(p, m: int) -> tuple:
    out = list(p) + [0] * m
    for i, c in enumerate(p):
        out[i + m] -= c
    return trim(out)


def div_binomial(p, m: int):
    """``p / (1 - t^m)`` if exact, else ``None``."""
    q = list(p)
    # q_k = p_k + q_{k-m}; exactness means the top m coefficients of the running quotient vanish
    for k in range(m, len(q)):
        q[k] += q[k - m]
    if len(q) < m:
        return () if not any(q) else None
    if any(q[len(q) - m:]):
        return None
    return trim(q[: len(q) - m])


def series_mul(a: Sequence[int], b: Sequence[int], n: int) -> list:
    """Product of two integer series truncated after ``t^n``."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j in range(min(len(b), n + 1 - i)):
                out[i + j] += x * b[j]
    return out


def series_inverse(a: Sequence[int], n: int) -> list:
    if not a or a[0] not in (1, -1):
        raise ValidationError("series is not invertible over the integers")
    inv0 = a[0]
    out = [0] * (n + 1)
    out[0] = inv0
    for k in range(1, n + 1):
        s = sum(a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1))
        out[k] = -inv0 * s
    return out


def series_binomial_power(m: int, e: int, n: int) -> list:
    """``(1 - t^m)^e`` to order ``n`` for any integer ``e``."""
    out = [0] * (n + 1)
    out[0] = 1
    if e >= 0:
        for _ in range(e):
            for k in range(n, m - 1, -1):
                out[k] -= out[k - m]
    else:
        for _ in range(-e):
            for k in range(m, n + 1):
                out[k] += out[k - m]
    return out


def format_poly(p) -> str:
    if not p:
        return "0"
    out = ""
    for k, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        mag = abs(c)
        body = str(mag) if (mag != 1 or k == 0) else ""
        body += mono
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


class RationalFunction:
    """``num(t) / prod_m (1 - t^m)`` with integer ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable[int] = (), den: Iterable[int] = ()):
        self.num = trim(int(c) for c in num)
        den = tuple(sorted(int(m) for m in den))
        if any(m < 1 for m in den):
            raise ValidationError("denominator binomials need m >= 1")
        self.den = den if self.num else ()

    @classmethod
    def constant(cls, c: int):
        return cls((c,))

    @classmethod
    def from_binomials(cls, exponents) -> "RationalFunction":
        """``prod (1 - t^m)^{e_m}`` from a mapping ``m -> e_m``."""
        num, den = (1,), []
        for m, e in sorted(exponents.items()):
            if e > 0:
                for _ in range(e):
                    num = times_binomial(num, m)
            else:
                den.extend([m] * (-e))
        return cls(num, den)

    def _raise_to(self, target: Counter) -> tuple:
        """Numerator rewritten over the denominator ``target`` (must contain ``self.den``)."""
        num = self.num
        missing = target - Counter(self.den)
        for m, e in missing.items():
            for _ in range(e):
                num = times_binomial(num, m)
        return num

    def _common(self, other):
        target = Counter(self.den) | Counter(other.den)
        return self._raise_to(target), other._raise_to(target), tuple(target.elements())

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalFunction.constant(other)
        a, b, den = self._common(other)
        return RationalFunction(padd(a, b), den).reduce()

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(pneg(self.num), self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalFunction(pscale(self.num, other), self.den)
        return RationalFunction(pmul(self.num, other.num), self.den + other.den).reduce()

    __rmul__ = __mul__

    def exact_div(self, k: int) -> "RationalFunction":
        if any(c % k for c in self.num):
            raise ArithmeticError(f"numerator not divisible by {k}")
        return RationalFunction([c // k for c in self.num], self.den)

    def reduce(self) -> "RationalFunction":
        """Cancel denominator binomials that divide the numerator (largest first)."""
        num, den = self.num, Counter(self.den)
        if not num:
            return RationalFunction()
        changed = True
        while changed:
            changed = False
            for m in sorted(den, reverse=True):
                q = div_binomial(num, m)
                if q is not None:
                    num = q
                    den[m] -= 1
                    if not den[m]:
                        del den[m]
                    changed = True
                    break
        return RationalFunction(num, den.elements())

    def denominator_poly(self) -> tuple:
        d = (1,)
        for m in self.den:
            d = times_binomial(d, m)
        return d

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return pmul(self.num, other.denominator_poly()) == pmul(other.num, self.denominator_poly())

    def __hash__(self):
        # equal values may have different representations; hash only what is canonical
        return hash(len(self.num) - sum(self.den))

    def __bool__(self):
        return bool(self.num)

    def series(self, n: int) -> list:
        """Coefficients of ``t^0 .. t^n``."""
        out = list(self.num[: n + 1]) + [0] * max(0, n + 1 - len(self.num))
        for m in self.den:
            for k in range(m, n + 1):
                out[k] += out[k - m]
        return out

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        return cls(data["num"], data["den"])

    def __repr__(self):
        return f"RationalFunction({list(self.num)}, den={list(self.den)})"

    def __str__(self):
        if not self.num:
            return "0"
        counts = Counter(self.den)
        factors = []
        for m in sorted(counts):
            b = "(1-t)" if m == 1 else f"(1-t^{m})"
            factors.append(b if counts[m] == 1 else f"{b}^{counts[m]}")
        num = format_poly(self.num)
        if not factors:
            return num
        nonzero = [c for c in self.num if c]
        if len(nonzero) > 1:
            num = f"({num})"
        den = factors[0] if len(factors) == 1 else "(" + "".join(factors) + ")"
        return f"{num}/{den}"
