"""Independent single-faced moment-cumulant conversions.

Classical free, Boolean and monotone cumulants of a sequence of variables,
implemented directly on the positions ``1..n`` with their natural order.
This module shares nothing with the bipartition machinery; it exists as an
independent reference for the reduction of the two-faced families on
one-sided words (all-left words have natural standard order, so bifree,
biboolean and bimonotone cumulants must collapse to these).

Words are plain tuples of variable names, moments and cumulants are maps
from such tuples to :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

Q = Fraction

SINGLE_FAMILIES = ("free", "boolean", "monotone")


def set_partitions(n: int):
    """Set partitions of 1..n as tuples of blocks, restricted-growth order."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(k: int, mx: int):
        if k == n:
            blocks: list[list[int]] = [[] for _ in range(mx + 1)]
            for idx, b in enumerate(rgs):
                blocks[b].append(idx + 1)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(mx + 2):
            rgs[k] = b
            yield from rec(k + 1, max(mx, b))

    yield from rec(1, 0)


def is_noncrossing_line(blocks) -> bool:
    block_of = {}
    for bi, block in enumerate(blocks):
        for p in block:
            block_of[p] = bi
    for a in block_of:
        for c in block_of:
            if a < c and block_of[a] == block_of[c]:
                for b in range(a + 1, c):
                    for d in block_of:
                        if d > c and block_of[b] == block_of[d] != block_of[a]:
                            return False
    return True


def is_interval_line(blocks) -> bool:
    return all(max(b) - min(b) + 1 == len(b) for b in blocks)


def monotone_label_count(blocks) -> int:
    """Number of block orders with nested blocks later; 0 if crossing.

    Counted as linear extensions of the relation "outer before inner",
    picking one admissible next block at a time.
    """
    if not is_noncrossing_line(blocks):
        return 0
    nb = len(blocks)
    outer_of = [0] * nb  # bitmask of blocks that must come before
    for bi, inner in enumerate(blocks):
        for bo, outer in enumerate(blocks):
            if bo != bi:
                lo, hi = min(outer), max(outer)
                if any(lo < p < hi for p in inner):
                    outer_of[bi] |= 1 << bo

    memo = {0: 1}

    def count(placed: int) -> int:
        # orderings of the blocks in `placed` as a label prefix; the last
        # label may go to any block whose outer blocks are all also placed
        if placed in memo:
            return memo[placed]
        total = 0
        for bi in range(nb):
            bit = 1 << bi
            if placed & bit and outer_of[bi] & ~(placed ^ bit) == 0:
                total += count(placed ^ bit)
        memo[placed] = total
        return total

    return count((1 << nb) - 1)


@lru_cache(maxsize=None)
def _terms(family: str, n: int):
    out = []
    for blocks in set_partitions(n):
        if family == "free":
            if is_noncrossing_line(blocks):
                out.append((blocks, Q(1)))
        elif family == "boolean":
            if is_interval_line(blocks):
                out.append((blocks, Q(1)))
        elif family == "monotone":
            count = monotone_label_count(blocks)
            if count:
                out.append((blocks, Q(count, math.factorial(len(blocks)))))
        else:
            raise ValueError(f"unknown family {family!r}")
    return tuple(out)


def _pick(word: tuple[str, ...], block) -> tuple[str, ...]:
    return tuple(word[p - 1] for p in block)


def moments_from_cumulants(
    cumulants: dict[tuple[str, ...], Fraction],
    family: str,
    letters: tuple[str, ...],
    max_len: int,
) -> dict[tuple[str, ...], Fraction]:
    out: dict[tuple[str, ...], Fraction] = {(): Q(1)}
    for n in range(1, max_len + 1):
        for word in product(letters, repeat=n):
            total = Q(0)
            for blocks, weight in _terms(family, n):
                term = weight
                for block in blocks:
                    term *= cumulants[_pick(word, block)]
                    if not term:
                        break
                total += term
            out[word] = total
    return out


def cumulants_from_moments(
    moments: dict[tuple[str, ...], Fraction],
    family: str,
    letters: tuple[str, ...],
    max_len: int,
) -> dict[tuple[str, ...], Fraction]:
    out: dict[tuple[str, ...], Fraction] = {}
    for n in range(1, max_len + 1):
        for word in product(letters, repeat=n):
            rest = Q(0)
            for blocks, weight in _terms(family, n):
                if len(blocks) == 1:
                    continue
                term = weight
                for block in blocks:
                    term *= out[_pick(word, block)]
                    if not term:
                        break
                rest += term
            out[word] = moments[word] - rest
    return out
