from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from bifc.biset import StdOrder, restrict_lr, standard_order

lr_words = st.text(alphabet="LR", max_size=8)


@pytest.mark.parametrize(
    "alpha,perm",
    [
        ("RLRRL", (2, 5, 4, 3, 1)),
        ("LL", (1, 2)),
        ("RRR", (3, 2, 1)),
        ("", ()),
        ("RLRRL", (2, 5, 4, 3, 1)),
    ],
)
def test_standard_order_perm(alpha, perm):
    assert standard_order(alpha).perm == perm


def test_standard_order_rejects_bad_letters():
    with pytest.raises(ValueError):
        StdOrder("LX")


@pytest.mark.parametrize(
    "alpha,positions,expected",
    [
        ("LRLL", {1, 3, 4}, "LLL"),
        ("LRLL", set(), ""),
        ("LRLL", {2}, "R"),
    ],
)
def test_restrict_lr(alpha, positions, expected):
    assert restrict_lr(alpha, positions) == expected


def test_restrict_lr_out_of_range():
    with pytest.raises(ValueError):
        restrict_lr("LR", {3})


@given(lr_words, st.data())
def test_restriction_commutes_with_standard_order(alpha, data):
    # morphisms of ordered bisets preserve the standard order: restricting
    # and re-indexing the permutation agrees with the sub-word's own order
    positions = sorted(
        data.draw(st.sets(st.integers(1, max(len(alpha), 1)), max_size=len(alpha)))
    ) if alpha else []
    positions = [p for p in positions if p <= len(alpha)]
    sub = restrict_lr(alpha, positions)
    index = {p: k for k, p in enumerate(sorted(positions), start=1)}
    filtered = tuple(index[p] for p in standard_order(alpha).perm if p in index)
    assert filtered == standard_order(sub).perm


def test_comparison_helpers():
    so = standard_order("RLRRL")
    assert so.lt(2, 5) and so.lt(5, 4) and so.lt(3, 1)
    assert not so.lt(1, 3)
    assert so.min_of({1, 3, 4}) == 4
    assert so.max_of({2, 5}) == 5
    assert so.sort_positions({1, 2, 3}) == (2, 3, 1)
    with pytest.raises(ValueError):
        so.min_of(set())


def test_before_after_partition_positions():
    so = standard_order("RLRRRRLR")
    assert so.before(5) == (2, 6, 7, 8)
    assert so.after(5) == (1, 3, 4)


def test_is_interval_exhaustive_small():
    # contiguity in the permutation, checked against the definition by rank
    for n in range(0, 7):
        for alpha in map("".join, product("LR", repeat=n)):
            so = standard_order(alpha)
            for size in range(n + 1):
                for subset in combinations(range(1, n + 1), size):
                    ranks = sorted(so.rank(i) for i in subset)
                    expected = not ranks or ranks[-1] - ranks[0] + 1 == len(ranks)
                    assert so.is_interval(subset) == expected
