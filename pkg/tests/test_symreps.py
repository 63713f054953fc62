"""Partitions, Littlewood-Richardson counting, and the character engine.

hook_dimension is checked against a standard-tableau counting DP, and the
LR backtracker against a filter over every possible filling, before either
is trusted inside the induction products.
"""

from functools import lru_cache
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from uniform_kl.klnumbers import c_closed
from uniform_kl.symreps import (
    Partition,
    SkewShape,
    VirtualRep,
    exterior_rho,
    hook_dimension,
    ih_rep,
    induce_product,
    lemma_key_check,
    lemma_key_expected,
    lr_coefficient,
    partitions_of,
    skew_shape_components,
    verify_main2,
)


# ---------------------------------------------------------------- oracles


def count_standard_tableaux(shape):
    """Number of standard Young tableaux, by dynamic programming over row
    profiles; independent of the hook-length formula."""
    shape = tuple(shape)

    @lru_cache(maxsize=None)
    def walk(profile):
        if all(profile[r] == shape[r] for r in range(len(shape))):
            return 1
        total = 0
        for r in range(len(shape)):
            if profile[r] < shape[r] and (r == 0 or profile[r - 1] > profile[r]):
                nxt = list(profile)
                nxt[r] += 1
                total += walk(tuple(nxt))
        return total

    return walk((0,) * len(shape))


def lr_filter_oracle(nu, mu, lam):
    """Count LR tableaux by trying every assignment of values to cells and
    filtering; no pruning, no shared code with the library backtracker."""
    if sum(mu) + sum(lam) != sum(nu):
        return 0
    cells = []
    for r, row in enumerate(nu):
        lo = lam[r] if r < len(lam) else 0
        if lo > row:
            return 0
        cells.extend((r, c) for c in range(lo, row))
    if not cells:
        return 1
    nvals = len(mu)
    count = 0
    for values in product(range(1, nvals + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        # content
        if any(values.count(v) != mu[v - 1] for v in range(1, nvals + 1)):
            continue
        # rows weakly increase, columns strictly increase
        ok = True
        for (r, c), v in grid.items():
            if (r, c + 1) in grid and grid[(r, c + 1)] < v:
                ok = False
                break
            if (r + 1, c) in grid and grid[(r + 1, c)] <= v:
                ok = False
                break
        if not ok:
            continue
        # reverse reading word is a lattice word
        word = []
        for r, row in enumerate(nu):
            lo = lam[r] if r < len(lam) else 0
            word.extend(grid[(r, c)] for c in range(row - 1, lo - 1, -1))
        seen = [0] * (nvals + 2)
        for v in word:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                ok = False
                break
        if ok:
            count += 1
    return count


partitions_strategy = st.builds(
    lambda parts: Partition(tuple(sorted(parts, reverse=True))),
    st.lists(st.integers(1, 5), max_size=4),
)


# -------------------------------------------------------------- partitions


def test_partition_construction():
    assert Partition((3, 1, 1)) == (3, 1, 1)
    assert Partition() == ()
    assert Partition((3, 1)).size == 4
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partition_maybe():
    assert Partition.maybe((2, 2)) == (2, 2)
    assert Partition.maybe((2, 3)) is None
    assert Partition.maybe((0, 1)) is None
    assert Partition.maybe((1, -1)) is None
    assert Partition.maybe(()) == ()


def test_conjugate():
    assert Partition((4, 2, 1)).conjugate() == (3, 2, 1, 1)
    assert Partition((2, 2)).conjugate() == (2, 2)
    assert Partition().conjugate() == ()


@given(partitions_strategy)
def test_conjugate_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam


def test_contains():
    assert Partition((3, 2)).contains(Partition((2, 2)))
    assert Partition((3, 2)).contains(Partition(()))
    assert not Partition((3, 2)).contains(Partition((1, 1, 1)))
    assert not Partition((3, 2)).contains(Partition((4,)))


def test_partitions_of():
    assert partitions_of(0) == (Partition(()),)
    assert partitions_of(4) == (
        Partition((4,)),
        Partition((3, 1)),
        Partition((2, 2)),
        Partition((2, 1, 1)),
        Partition((1, 1, 1, 1)),
    )
    # partition numbers 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
    counts = [len(partitions_of(n)) for n in range(11)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


# -------------------------------------------------------------- dimensions


def test_hook_dimension_frozen_values():
    assert hook_dimension(Partition((5,))) == 1
    assert hook_dimension(Partition((2, 2))) == 2
    assert hook_dimension(Partition((2, 2, 2))) == 5
    assert hook_dimension(Partition((2, 2, 2, 2))) == 14
    assert hook_dimension(Partition(())) == 1


def test_hook_dimension_against_tableau_counting():
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert hook_dimension(lam) == count_standard_tableaux(lam), lam


def test_dimensions_sum_of_squares():
    # sum of dim^2 over partitions of n is n!
    for n in range(1, 9):
        assert sum(hook_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


# ------------------------------------------------------------- skew shapes


def test_skew_shape_cells():
    shape = SkewShape(Partition((3, 2)), Partition((2,)))
    assert shape.cells() == ((0, 2), (1, 0), (1, 1))
    assert shape.size == 3
    with pytest.raises(ValueError):
        SkewShape(Partition((2,)), Partition((3,)))


def test_skew_components_simple():
    shape = SkewShape(Partition((3, 2)), Partition((2,)))
    comps = skew_shape_components(shape)
    assert len(comps) == 2
    assert comps[0].cells == ((0, 2),)
    assert comps[1].cells == ((1, 0), (1, 1))
    assert comps[0].height == 1 and comps[0].width == 1
    assert comps[1].height == 1 and comps[1].width == 2
    assert all(c.is_rectangle for c in comps)


def test_skew_components_empty():
    lam = Partition((3, 1))
    assert skew_shape_components(SkewShape(lam, lam)) == []


def test_skew_components_figure_instance():
    # nu/lam for (n, i, p, q) = (20, 6, 8, 3): a 1x5 strip in row 0 and a
    # 3x2 block in rows 4..6
    nu = Partition((8, 2, 2, 2, 2, 2, 2))
    lam = Partition((3, 2, 2, 2))
    comps = skew_shape_components(SkewShape(nu, lam))
    assert len(comps) == 2
    strip, block = comps
    assert strip.cells == tuple((0, c) for c in range(3, 8))
    assert strip.height == 1 and strip.width == 5
    assert block.cells == tuple((r, c) for r in range(4, 7) for c in range(2))
    assert block.height == 3 and block.width == 2
    assert strip.is_rectangle and block.is_rectangle


# ---------------------------------------------------------------------- LR


def test_lr_trivial_cases():
    nu = Partition((3, 2))
    assert lr_coefficient(nu, Partition(()), nu) == 1
    assert lr_coefficient(nu, Partition((1,)), nu) == 0


def test_lr_frozen_values():
    assert lr_coefficient(Partition((2, 2)), Partition((2,)), Partition((2,))) == 1
    assert lr_coefficient(Partition((2, 1, 1)), Partition((2,)), Partition((2,))) == 0
    assert lr_coefficient(Partition((3, 1)), Partition((2,)), Partition((2,))) == 1
    # the figure instance
    assert (
        lr_coefficient(
            Partition((8, 2, 2, 2, 2, 2, 2)),
            Partition((10, 1)),
            Partition((3, 2, 2, 2)),
        )
        == 0
    )


def test_lr_against_filter_oracle():
    sizes_checked = 0
    for n in range(2, 7):
        for nu in partitions_of(n):
            for lamsize in range(n + 1):
                for lam in partitions_of(lamsize):
                    if not nu.contains(lam):
                        continue
                    for mu in partitions_of(n - lamsize):
                        assert lr_coefficient(nu, mu, lam) == lr_filter_oracle(
                            nu, mu, lam
                        ), (nu, mu, lam)
                        sizes_checked += 1
    assert sizes_checked > 200


# cold lr_coefficient caches can push a single large example past the
# default 200ms deadline, so timing is not part of this property
@settings(max_examples=60, deadline=None)
@given(partitions_strategy, partitions_strategy)
def test_lr_symmetry(mu, lam):
    for nu in partitions_of(mu.size + lam.size):
        assert lr_coefficient(nu, mu, lam) == lr_coefficient(nu, lam, mu)


# ------------------------------------------------------------- virtual rep


def test_virtual_rep_algebra():
    a = VirtualRep.irreducible(Partition((2, 1)))
    b = VirtualRep.irreducible(Partition((3,)))
    s = a + b
    assert s.multiplicity(Partition((2, 1))) == 1
    assert s - a == b
    assert (a - a) == VirtualRep.zero(3)
    assert not (a - a)
    assert (-a).multiplicity(Partition((2, 1))) == -1
    assert (2 * a).dimension() == 2 * a.dimension()
    with pytest.raises(ValueError):
        a + VirtualRep.irreducible(Partition((2, 2)))
    with pytest.raises(ValueError):
        VirtualRep(3, {Partition((2, 2)): 1})


def test_virtual_rep_rendering():
    zero = VirtualRep.zero(4)
    assert str(zero) == "0"
    r = VirtualRep(4, {Partition((4,)): 1, Partition((3, 1)): -2})
    assert str(r) == "V[4] - 2*V[3,1]"
    assert str(VirtualRep.irreducible(Partition((2, 2)))) == "V[2,2]"


def test_induce_product_frozen():
    two = Partition((2,))
    out = induce_product(two, two)
    assert out == VirtualRep(
        4, {Partition((4,)): 1, Partition((3, 1)): 1, Partition((2, 2)): 1}
    )
    assert out.dimension() == comb(4, 2)
    out = induce_product(Partition((1, 1)), two)
    assert out == VirtualRep(4, {Partition((3, 1)): 1, Partition((2, 1, 1)): 1})
    # empty partition is the unit
    lam = Partition((3, 1))
    assert induce_product(Partition(()), lam) == VirtualRep.irreducible(lam)


def test_induce_product_bilinear():
    a = VirtualRep.irreducible(Partition((2,)))
    b = VirtualRep.irreducible(Partition((1, 1)))
    c = VirtualRep.irreducible(Partition((3,)))
    lhs = induce_product(a - b, c)
    rhs = induce_product(a, c) - induce_product(b, c)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(partitions_strategy, partitions_strategy)
def test_induce_dimension_bilinearity(mu, lam):
    n = mu.size + lam.size
    out = induce_product(mu, lam)
    assert out.dimension() == comb(n, mu.size) * hook_dimension(mu) * hook_dimension(lam)


# ---------------------------------------------------------- exterior power


def test_exterior_rho_frozen():
    assert exterior_rho(4, 0) == VirtualRep.irreducible(Partition((4,)))
    assert exterior_rho(4, 1) == VirtualRep(
        4, {Partition((4,)): 1, Partition((3, 1)): 1}
    )
    assert exterior_rho(2, 2) == VirtualRep.irreducible(Partition((1, 1)))
    assert exterior_rho(3, -1) == VirtualRep.zero(3)
    assert exterior_rho(3, 4) == VirtualRep.zero(3)
    with pytest.raises(ValueError):
        exterior_rho(0, 0)


def test_exterior_rho_dimensions():
    for m in range(1, 9):
        for k in range(-1, m + 2):
            expected = comb(m, k) if 0 <= k <= m else 0
            assert exterior_rho(m, k).dimension() == expected, (m, k)


# ------------------------------------------------------------------ engine


def test_ih_rep_base_and_vanishing():
    assert ih_rep(2, 0) == VirtualRep.irreducible(Partition((2,)))
    assert ih_rep(5, 2) == VirtualRep.zero(5)
    assert ih_rep(3, 1) == VirtualRep.zero(3)
    with pytest.raises(ValueError):
        ih_rep(1, 0)
    with pytest.raises(ValueError):
        ih_rep(4, -1)


def test_ih_rep_hand_expansion():
    # (4,1): -(V[4]+V[3,1]) + Ind(V[2] x V[2]) = V[2,2]
    assert ih_rep(4, 1) == VirtualRep.irreducible(Partition((2, 2)))
    assert ih_rep(4, 1).dimension() == 2


def test_ih_rep_is_single_irreducible():
    for n in range(2, 11):
        for i in range((n - 2) // 2 + 1):
            target = Partition((n - 2 * i,) + (2,) * i)
            rep = ih_rep(n, i)
            assert rep.terms == {target: 1}, (n, i)
            assert rep.dimension() == c_closed(n, i), (n, i)
            assert verify_main2(n, i)


def test_verify_main2_named_case():
    assert verify_main2(14, 5)
    assert ih_rep(14, 5).terms == {Partition((4, 2, 2, 2, 2, 2)): 1}


def test_verify_main2_domain():
    with pytest.raises(ValueError):
        verify_main2(5, 2)
    with pytest.raises(ValueError):
        verify_main2(4, -1)


# --------------------------------------------------------------- key lemma


def test_lemma_key_frozen_cases():
    assert lemma_key_check(6, 2, 3, 1) == (1, 0)
    assert lemma_key_check(6, 2, 2, 0) == (0, 0)
    assert lemma_key_check(20, 6, 8, 3) == (0, 0)


def test_lemma_key_matches_pattern():
    for n in range(2, 11):
        for i in range((n - 2) // 2 + 1):
            for p in range(1, min(2 * i, n - 1) + 1):
                for q in range(min(i, 2 * i - p) + 1):
                    assert lemma_key_check(n, i, p, q) == lemma_key_expected(
                        n, i, p, q
                    ), (n, i, p, q)


def test_lemma_key_domain():
    with pytest.raises(ValueError):
        lemma_key_check(6, 3, 3, 1)  # 2i >= n-1
    with pytest.raises(ValueError):
        lemma_key_check(6, 2, 0, 0)  # p out of range
    with pytest.raises(ValueError):
        lemma_key_check(6, 2, 6, 0)  # p out of range
    with pytest.raises(ValueError):
        lemma_key_check(6, 2, 3, 2)  # q > 2i - p


def test_top_stratum_contributes_nothing():
    # At p = n-1 the exterior-power index 2i-p-q is negative for every
    # index i below the vanishing threshold and every q >= 0, so both hook
    # shapes of the stratum term are out of range and the contribution is
    # the zero representation.
    from uniform_kl.symreps import _hook

    for n in range(3, 12):
        p = n - 1
        for i in range((n - 2) // 2 + 1):
            assert 2 * i - p < 0
            for q in range(i + 1):
                leg = 2 * i - p - q
                assert leg < 0  # never a valid exterior power
                assert _hook(n + q - 2 * i - 1, leg) is None
                assert _hook(n + q - 2 * i, leg - 1) is None
