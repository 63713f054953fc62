"""Coefficients of the Kazhdan-Lusztig polynomial of the uniform matroid of
rank n-1 on n elements.

Three independent routes to the same integers live here: a product closed
form, a bottom-up inclusion-exclusion recursion over a coefficient table,
and brute-force enumeration of non-crossing diagonal sets of a convex
polygon.  The degree-reversal identity and strict log-concavity of the
coefficient rows are checked by dedicated functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .polynomial import UniPoly

__all__ = [
    "binomial",
    "multinomial",
    "c_closed",
    "d_cayley",
    "polygon_diagonals",
    "diagonals_cross",
    "ChordSet",
    "d_bruteforce",
    "KLTable",
    "c_recursion",
    "kl_poly",
    "check_epw2",
    "LogConcaveTriple",
    "check_logconcave",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; zero outside 0 <= k <= n, n < 0 rejected."""
    if n < 0:
        raise ValueError("binomial needs n >= 0, got n=%d" % n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts) -> int:
    """n! / prod(p!) over the given parts; zero when any part is negative."""
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError("parts %r do not sum to %d" % (parts, n))
    if any(p < 0 for p in parts):
        return 0
    out = 1
    rest = n
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


def c_closed(n: int, i: int) -> int:
    """Coefficient of t^i: binom(n-i-2, i) * binom(n, i) / (i+1), exactly.

    Vanishes precisely when 2i >= n - 1.
    """
    if n < 2:
        raise ValueError("need n >= 2, got n=%d" % n)
    if i < 0:
        raise ValueError("need i >= 0, got i=%d" % i)
    if 2 * i >= n - 1:
        return 0
    value, rem = divmod(binomial(n - i - 2, i) * binomial(n, i), i + 1)
    assert value > 0 and rem == 0, "closed form must divide exactly at (n=%d, i=%d)" % (n, i)
    return value


def d_cayley(m: int, k: int) -> int:
    """Number of k-element non-crossing diagonal sets of a convex m-gon,
    by the closed form binom(m-3, k) * binom(m+k-1, k) / (k+1)."""
    if m < 3:
        raise ValueError("need m >= 3, got m=%d" % m)
    if k < 0:
        raise ValueError("need k >= 0, got k=%d" % k)
    value, rem = divmod(binomial(m - 3, k) * binomial(m + k - 1, k), k + 1)
    assert rem == 0, "dissection closed form must divide exactly at (m=%d, k=%d)" % (m, k)
    return value


def polygon_diagonals(m: int):
    """Diagonals of the convex m-gon on vertices 0..m-1, as sorted pairs."""
    if m < 3:
        raise ValueError("need m >= 3, got m=%d" % m)
    return [
        (a, b)
        for a in range(m)
        for b in range(a + 2, m)
        if (a, b) != (0, m - 1)
    ]


def diagonals_cross(d, e) -> bool:
    """True when the two diagonals cross in the interior.

    Diagonals that share an endpoint do not cross.
    """
    (a, b), (c, f) = d, e
    return a < c < b < f or c < a < f < b


@dataclass(frozen=True)
class ChordSet:
    """A set of pairwise non-crossing diagonals of a convex m-gon."""

    m: int
    diagonals: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "diagonals", frozenset(tuple(sorted(d)) for d in self.diagonals)
        )
        allowed = set(polygon_diagonals(self.m))
        for d in self.diagonals:
            if d not in allowed:
                raise ValueError("%r is not a diagonal of the %d-gon" % (d, self.m))
        for d, e in combinations(sorted(self.diagonals), 2):
            if diagonals_cross(d, e):
                raise ValueError("diagonals %r and %r cross" % (d, e))

    def __len__(self):
        return len(self.diagonals)


def d_bruteforce(m: int, k: int, cap: int = 12) -> int:
    """Count k-element non-crossing diagonal sets by backtracking.

    Serves as an enumeration oracle for d_cayley.  The polygon size is
    capped (default 12) because the search walks every non-crossing set of
    size up to k; raise the cap explicitly to go further.
    """
    if m < 3:
        raise ValueError("need m >= 3, got m=%d" % m)
    if m > cap:
        raise ValueError("m=%d exceeds the enumeration cap %d" % (m, cap))
    if k < 0:
        return 0
    diags = polygon_diagonals(m)
    if k > len(diags):
        return 0
    # blockers[x] has bit y set when diagonal y crosses diagonal x
    blockers = [0] * len(diags)
    for x in range(len(diags)):
        for y in range(x + 1, len(diags)):
            if diagonals_cross(diags[x], diags[y]):
                blockers[x] |= 1 << y
                blockers[y] |= 1 << x

    def count(start, need, blocked):
        if need == 0:
            return 1
        total = 0
        for idx in range(start, len(diags) - need + 1):
            if not (blocked >> idx) & 1:
                total += count(idx + 1, need - 1, blocked | blockers[idx])
        return total

    return count(0, k, 0)


class KLTable:
    """Grid of coefficients filled bottom-up by the double-sum recursion.

    Only the band 2i < n - 1 is stored; get() applies the vanishing
    convention (zero for i < 0 and for 2i >= n - 1) so lookups made by the
    recursion are total.
    """

    def __init__(self, max_n: int):
        if max_n < 2:
            raise ValueError("need max_n >= 2, got %d" % max_n)
        self.max_n = max_n
        self.cells = {}
        for n in range(2, max_n + 1):
            for i in range((n - 2) // 2 + 1):
                self.cells[n, i] = c_recursion(n, i, self)

    def get(self, n: int, i: int) -> int:
        if i < 0 or 2 * i >= n - 1:
            return 0
        return self.cells[n, i]


def c_recursion(n: int, i: int, table: KLTable | None = None) -> int:
    """Evaluate the inclusion-exclusion double sum for the coefficient (n, i):

        (-1)^i C(n, i)
        + sum over 0 <= j < i, 2j+2 <= k <= i+j+1 of
          (-1)^(i+j+k+1) C(n; k, i+j-k+1, n-i-j-1) c(k, j)

    Lower coefficients are read from `table` (built on demand when None);
    the table must cover every n' <= n.  Every lookup satisfies 2j <= k - 2,
    so the stored band is enough and the vanishing convention never hides a
    value the sum actually needs.

    The vanishing rule is applied to the queried cell as well: the double
    sum characterizes the coefficients only below the vanishing threshold
    (it even returns (-1)^i instead of 0 at i = n-1 and i = n), so indices
    with 2i >= n - 1 answer 0 directly.
    """
    if n < 2:
        raise ValueError("need n >= 2, got n=%d" % n)
    if i < 0:
        raise ValueError("need i >= 0, got i=%d" % i)
    if 2 * i >= n - 1:
        return 0
    if table is None:
        table = KLTable(n)
    acc = (-1) ** i * binomial(n, i)
    for j in range(i):
        for k in range(2 * j + 2, i + j + 2):
            weight = multinomial(n, (k, i + j - k + 1, n - i - j - 1))
            if weight == 0:
                continue
            acc += (-1) ** (i + j + k + 1) * weight * table.get(k, j)
    return acc


def kl_poly(n: int) -> UniPoly:
    """The Kazhdan-Lusztig polynomial of the rank n-1 uniform matroid on n
    elements, with closed-form coefficients; degree is below (n-1)/2."""
    if n < 2:
        raise ValueError("need n >= 2, got n=%d" % n)
    return UniPoly([c_closed(n, i) for i in range((n - 2) // 2 + 1)])


def check_epw2(n: int):
    """Degree-reversal identity for P_n.

    Compares t^(n-1) P_n(1/t) with the alternating binomial sum
    sum_j (-1)^j C(n, j) (t^(n-j-1) - 1) plus the twisted sum
    sum_{k>=2} C(n, k) (t-1)^(n-k) P_k(t).  Returns (holds, residual);
    `residual` is the polynomial difference, zero exactly when it holds.
    """
    lhs = kl_poly(n).reverse(n - 1)
    rhs = UniPoly()
    for j in range(n):
        rhs += (-1) ** j * binomial(n, j) * (UniPoly.monomial(n - j - 1) - 1)
    t_minus_1 = UniPoly((-1, 1))
    for k in range(2, n + 1):
        rhs += binomial(n, k) * (t_minus_1 ** (n - k)) * kl_poly(k)
    residual = lhs - rhs
    return (not residual, residual)


@dataclass(frozen=True)
class LogConcaveTriple:
    """One strictness check c(n, i)^2 > c(n, i-1) * c(n, i+1)."""

    n: int
    i: int
    lower: int
    middle: int
    upper: int

    @property
    def margin(self) -> int:
        return self.middle ** 2 - self.lower * self.upper

    @property
    def strict(self) -> bool:
        return self.margin > 0


def check_logconcave(n: int):
    """Strict log-concavity of the coefficient row of P_n.

    Returns the triple for every interior index 0 < i < floor(n/2) - 1;
    an empty list means the statement is vacuous for this n.
    """
    if n < 2:
        raise ValueError("need n >= 2, got n=%d" % n)
    return [
        LogConcaveTriple(n, i, c_closed(n, i - 1), c_closed(n, i), c_closed(n, i + 1))
        for i in range(1, n // 2 - 1)
    ]
