"""Partition combinatorics and the virtual representation ring of the
symmetric groups.

Dimensions come from the hook-length formula, products of irreducibles
from Littlewood-Richardson coefficients counted by tableau backtracking.
On top of that sits the stratification recursion that assembles the
intersection-cohomology characters whose dimensions are the
Kazhdan-Lusztig coefficients, plus the two-coefficient check that makes
each step of the recursion collapse to a single irreducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

__all__ = [
    "Partition",
    "partitions_of",
    "hook_dimension",
    "SkewShape",
    "SkewComponent",
    "skew_shape_components",
    "lr_coefficient",
    "VirtualRep",
    "induce_product",
    "exterior_rho",
    "ih_rep",
    "verify_main2",
    "lemma_key_check",
    "lemma_key_expected",
]


def _weakly_decreasing_positive(parts) -> bool:
    if not all(isinstance(p, int) and p > 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; the empty partition is
    allowed and indexes the trivial module of S_0."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        if not _weakly_decreasing_positive(parts):
            raise ValueError("not a partition: %r" % (parts,))
        return tuple.__new__(cls, parts)

    @classmethod
    def maybe(cls, parts):
        """The partition, or None when the sequence is not one.

        None stands for the zero representation wherever a construction can
        produce an out-of-range shape.
        """
        parts = tuple(parts)
        return cls(parts) if _weakly_decreasing_positive(parts) else None

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(tuple(sum(1 for p in self if p > c) for c in range(self[0])))

    def contains(self, other) -> bool:
        """Row-by-row containment of Young diagrams."""
        if len(other) > len(self):
            return False
        return all(o <= s for s, o in zip(self, other))

    def __repr__(self):
        return "Partition(%s)" % (tuple(self),)


@cache
def partitions_of(n: int):
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        return ()
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(largest, remaining), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(out)


@cache
def hook_dimension(lam) -> int:
    """Dimension of the irreducible S_n module indexed by lam, by the
    hook-length formula n! / prod(hooks)."""
    lam = Partition(lam)
    if not lam:
        return 1
    conj = lam.conjugate()
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= row - c + conj[c] - r - 1
    dim, rem = divmod(math.factorial(lam.size), hooks)
    assert rem == 0, "hook product must divide the factorial"
    return dim


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner; the inner shape must fit in the outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(
                "inner %r does not fit inside outer %r"
                % (tuple(self.inner), tuple(self.outer))
            )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self):
        """Cells (row, col) of the skew diagram, row-major."""
        out = []
        for r, row in enumerate(self.outer):
            lo = self.inner[r] if r < len(self.inner) else 0
            out.extend((r, c) for c in range(lo, row))
        return tuple(out)


@dataclass(frozen=True)
class SkewComponent:
    """One connected component of a skew diagram (edge adjacency)."""

    cells: tuple

    @property
    def row_range(self):
        rows = [r for r, _ in self.cells]
        return min(rows), max(rows)

    @property
    def col_range(self):
        cols = [c for _, c in self.cells]
        return min(cols), max(cols)

    @property
    def height(self) -> int:
        lo, hi = self.row_range
        return hi - lo + 1

    @property
    def width(self) -> int:
        lo, hi = self.col_range
        return hi - lo + 1

    @property
    def is_rectangle(self) -> bool:
        return len(self.cells) == self.height * self.width


def skew_shape_components(shape: SkewShape):
    """Connected components of the skew diagram under edge adjacency,
    ordered by their topmost-leftmost cell."""
    todo = set(shape.cells())
    out = []
    for seed in sorted(todo):
        if seed not in todo:
            continue
        stack = [seed]
        todo.discard(seed)
        comp = []
        while stack:
            r, c = stack.pop()
            comp.append((r, c))
            for nbr in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nbr in todo:
                    todo.discard(nbr)
                    stack.append(nbr)
        out.append(SkewComponent(tuple(sorted(comp))))
    return out


@cache
def lr_coefficient(nu, mu, lam) -> int:
    """Littlewood-Richardson coefficient: the number of semistandard
    fillings of the skew shape nu/lam with content mu whose reverse reading
    word (right to left along each row, rows top to bottom) is a lattice
    word.

    Cells are filled in reverse-reading order, so the lattice condition and
    both semistandardness conditions prune the search one cell at a time.
    """
    nu, mu, lam = Partition(nu), Partition(mu), Partition(lam)
    if mu.size + lam.size != nu.size or not nu.contains(lam):
        return 0
    if len(nu) - len(lam) > len(mu):
        return 0  # a first-column strip needs distinct values 1..len(mu)
    if nu and nu[0] - (lam[0] if lam else 0) > (mu[0] if mu else 0):
        return 0  # the top skew row can hold nothing but 1s
    cells = []
    for r, row in enumerate(nu):
        lo = lam[r] if r < len(lam) else 0
        for c in range(row - 1, lo - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1
    nvals = len(mu)
    grid = {}
    placed = [0] * (nvals + 1)

    def fill(pos):
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        right = grid.get((r, c + 1))
        hi = right if right is not None else nvals
        above = grid.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        total = 0
        for v in range(lo, hi + 1):
            if placed[v] >= mu[v - 1]:
                continue
            if v > 1 and placed[v] >= placed[v - 1]:
                continue  # lattice: every prefix has at least as many v-1 as v
            grid[(r, c)] = v
            placed[v] += 1
            total += fill(pos + 1)
            placed[v] -= 1
        grid.pop((r, c), None)
        return total

    return fill(0)


class VirtualRep:
    """Integer linear combination of irreducible characters of a fixed S_n.

    Multiplicities may be negative; zero multiplicities are dropped, so the
    zero element has an empty term map.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("need n >= 0, got %d" % n)
        clean = {}
        for lam, mult in (terms or {}).items():
            if not mult:
                continue
            lam = Partition(lam)
            if lam.size != n:
                raise ValueError(
                    "partition %r has size %d, expected %d" % (tuple(lam), lam.size, n)
                )
            clean[lam] = mult
        self.n = n
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def irreducible(cls, lam):
        lam = Partition(lam)
        return cls(lam.size, {lam: 1})

    def multiplicity(self, lam) -> int:
        return self.terms.get(Partition(lam), 0)

    def dimension(self) -> int:
        """Virtual dimension: the multiplicity-weighted sum of hook-length
        dimensions; may be negative."""
        return sum(m * hook_dimension(lam) for lam, m in self.terms.items())

    def _combine(self, other, sign):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("degrees differ: %d vs %d" % (self.n, other.n))
        out = dict(self.terms)
        for lam, m in other.terms.items():
            out[lam] = out.get(lam, 0) + sign * m
        return VirtualRep(self.n, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return VirtualRep(self.n, {lam: -m for lam, m in self.terms.items()})

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return VirtualRep(self.n, {lam: scalar * m for lam, m in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for lam in sorted(self.terms, reverse=True):
            m = self.terms[lam]
            body = "V[%s]" % ",".join(str(p) for p in lam)
            if abs(m) != 1:
                body = "%d*%s" % (abs(m), body)
            if not pieces:
                pieces.append(("-" if m < 0 else "") + body)
            else:
                pieces.append(("- " if m < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "VirtualRep<S_%d: %s>" % (self.n, self)


@cache
def _induce_pair(mu: Partition, lam: Partition):
    """Decomposition of the induction of the outer pair (mu, lam) into
    irreducibles of S_{|mu|+|lam|}; cached, so treat the dict as frozen."""
    out = {}
    for nu in partitions_of(mu.size + lam.size):
        c = lr_coefficient(nu, mu, lam)
        if c:
            out[nu] = c
    return out


def induce_product(left, right) -> VirtualRep:
    """Product induced from the direct product of two symmetric groups,
    decomposed by Littlewood-Richardson coefficients.  Arguments may be
    partitions or virtual representations; the product is bilinear."""
    lv = left if isinstance(left, VirtualRep) else VirtualRep.irreducible(left)
    rv = right if isinstance(right, VirtualRep) else VirtualRep.irreducible(right)
    out = {}
    for mu, cm in lv.terms.items():
        for lam, cl in rv.terms.items():
            weight = cm * cl
            for nu, c in _induce_pair(mu, lam).items():
                out[nu] = out.get(nu, 0) + weight * c
    return VirtualRep(lv.n + rv.n, out)


def _hook(head: int, leg: int):
    """The hook partition [head, 1^leg], or None when out of range."""
    if leg < 0:
        return None
    return Partition.maybe((head,) + (1,) * leg)


def exterior_rho(m: int, k: int) -> VirtualRep:
    """k-th exterior power of the m-point permutation representation:
    the sum of the hooks [m-k, 1^k] and [m-k+1, 1^(k-1)], either of which
    drops out when its shape is out of range.  Virtual dimension C(m, k)."""
    if m < 1:
        raise ValueError("need m >= 1, got %d" % m)
    terms = {}
    for lam in (_hook(m - k, k), _hook(m - k + 1, k - 1)):
        if lam is not None:
            terms[lam] = terms.get(lam, 0) + 1
    return VirtualRep(m, terms)


@cache
def ih_rep(n: int, i: int) -> VirtualRep:
    """Virtual S_n-character of the degree-2i intersection cohomology whose
    dimension is the Kazhdan-Lusztig coefficient c(n, i).

    Assembled by inclusion-exclusion over boundary strata:

        (-1)^i wedge^i rho_n
        + sum over 0 < p < n-1, 0 <= q <= min(i, 2i-p) of
          (-1)^(p+q) Ind(wedge^(2i-p-q) rho_{n-p-1} (x) ih(p+1, i-q))

    with ih(n, i) = 0 whenever 2i >= n - 1.  The recursion never assumes
    the answer is irreducible; that is what verify_main2 checks.
    """
    if n < 2:
        raise ValueError("need n >= 2, got %d" % n)
    if i < 0:
        raise ValueError("need i >= 0, got %d" % i)
    if 2 * i >= n - 1:
        return VirtualRep.zero(n)
    total = (-1) ** i * exterior_rho(n, i)
    for p in range(1, n - 1):
        for q in range(min(i, 2 * i - p) + 1):
            wedge = exterior_rho(n - p - 1, 2 * i - p - q)
            if not wedge:
                continue
            sub = ih_rep(p + 1, i - q)
            if not sub:
                continue
            term = induce_product(wedge, sub)
            total = total + term if (p + q) % 2 == 0 else total - term
    return total


def verify_main2(n: int, i: int) -> bool:
    """True when ih_rep(n, i) is exactly the single irreducible indexed by
    [n-2i, 2^i] with multiplicity one."""
    if n < 2 or i < 0 or 2 * i >= n - 1:
        raise ValueError("need n >= 2 and 0 <= i < (n-1)/2, got n=%d i=%d" % (n, i))
    target = Partition((n - 2 * i,) + (2,) * i)
    return ih_rep(n, i).terms == {target: 1}


def lemma_key_check(n: int, i: int, p: int, q: int):
    """The pair of Littlewood-Richardson multiplicities that controls one
    stratum term of the recursion.

    With nu = [n-2i, 2^i], lam = [p+2q-2i+1, 2^(i-q)] and the two hooks
    mu = [n+q-2i-1, 1^(2i-p-q)], mu' = [n+q-2i, 1^(2i-p-q-1)], returns
    (c^nu_{mu,lam}, c^nu_{mu',lam}).  Any shape out of range contributes 0.
    """
    if n < 2 or i < 0 or 2 * i >= n - 1:
        raise ValueError("need n >= 2 and 0 <= i < (n-1)/2, got n=%d i=%d" % (n, i))
    if not 0 < p < n:
        raise ValueError("need 0 < p < n, got p=%d" % p)
    if not 0 <= q <= min(i, 2 * i - p):
        raise ValueError("need 0 <= q <= min(i, 2i-p), got q=%d" % q)
    nu = Partition((n - 2 * i,) + (2,) * i)
    lam = Partition.maybe((p + 2 * q - 2 * i + 1,) + (2,) * (i - q))
    mu = _hook(n + q - 2 * i - 1, 2 * i - p - q)
    mu_shift = _hook(n + q - 2 * i, 2 * i - p - q - 1)
    if lam is None:
        return (0, 0)
    first = lr_coefficient(nu, mu, lam) if mu is not None else 0
    second = lr_coefficient(nu, mu_shift, lam) if mu_shift is not None else 0
    return (first, second)


def lemma_key_expected(n: int, i: int, p: int, q: int):
    """The predicted value of lemma_key_check: the first coefficient is 1
    exactly on the diagonal p = 2i-1, q = 1 with i > 0, and the second
    always vanishes."""
    return (1 if (i > 0 and p == 2 * i - 1 and q == 1) else 0, 0)
