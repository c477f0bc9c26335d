"""Brute-force reference computations used to freeze and cross-check expected values.

Nothing here calls into the library's algorithms; only group tables and
G-set action tables are read.
"""

import itertools
import math
from fractions import Fraction


def brute_subgroups(group):
    """Every subset closed under the product that contains the identity (small groups only)."""
    out = []
    others = range(1, group.order)
    for r in range(group.order):
        for combo in itertools.combinations(others, r):
            s = {0, *combo}
            if all(group.product[a][b] in s for a in s for b in s):
                out.append(frozenset(s))
    return out


def brute_conjugacy_classes(group):
    subs = brute_subgroups(group)
    classes = []
    seen = set()
    for s in subs:
        if s in seen:
            continue
        conj = {frozenset(group.product[group.product[g][h]][group.inverse[g]] for h in s)
                for g in range(group.order)}
        seen |= conj
        classes.append(conj)
    return classes


def left_cosets(group, members):
    cos = []
    for x in range(group.order):
        c = frozenset(group.product[x][h] for h in members)
        if c not in cos:
            cos.append(c)
    return cos


def coset_fixed_count(group, big, small):
    """Number of cosets x*big fixed by every element of ``small``."""
    return sum(1 for c in left_cosets(group, big)
               if all(frozenset(group.product[f][y] for y in c) == c for f in small))


def orbit_sizes_on_cosets(group, h_members, f_members):
    """Sizes of the F-orbits on G/H, computed on explicit coset sets."""
    cos = left_cosets(group, h_members)
    seen, sizes = set(), []
    for c in cos:
        if c in seen:
            continue
        orb = {frozenset(group.product[f][y] for y in c) for f in f_members}
        seen |= orb
        sizes.append(len(orb))
    return sorted(sizes)


def binomial_series(m, ell, n):
    """(1 - t^m)^(-ell) for ell >= 0, via binomial coefficients."""
    out = [0] * (n + 1)
    for j in range(n // m + 1):
        out[m * j] = math.comb(ell + j - 1, j) if ell else int(j == 0)
    return out


def series_product(a, b, n):
    out = [0] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def invariant_multisets(act, f_members, size, k):
    """Number of size-k multisets on ``size`` points invariant under the subgroup."""
    count = 0
    for ms in itertools.combinations_with_replacement(range(size), k):
        if all(tuple(sorted(act[f][p] for p in ms)) == ms for f in f_members):
            count += 1
    return count


def solve_rational(matrix, rhs):
    """Solve ``x @ matrix = rhs`` (row-vector convention) by Gaussian elimination over Q."""
    n = len(matrix)
    # transpose so we solve A y = b with A = matrix^T
    a = [[Fraction(matrix[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def orbifold_by_centralizers(group, act, size):
    """sum over element classes [g] of |X^g / C(g)|."""
    seen, total = set(), 0
    for g in range(group.order):
        if g in seen:
            continue
        seen |= {group.product[group.product[x][g]][group.inverse[x]] for x in range(group.order)}
        cent = [c for c in range(group.order) if group.product[c][g] == group.product[g][c]]
        fixed = [p for p in range(size) if act[g][p] == p]
        orbits, done = 0, set()
        for p in fixed:
            if p not in done:
                done |= {act[c][p] for c in cent}
                orbits += 1
        total += orbits
    return total


def exact_period_points(images):
    """{m: number of points of exact period m} by literal iteration."""
    out = {}
    n = len(images)
    for x in range(n):
        y = images[x]
        for m in range(1, n + 1):
            if y == x:
                out[m] = out.get(m, 0) + 1
                break
            y = images[y]
    return out
