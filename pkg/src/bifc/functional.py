"""Exact-rational linear functionals on incomplete words.

A functional is stored as a kind tag plus a finite table on complete
(variable-only) words; the kind fixes how values extend to arbitrary
incomplete words:

* ``lie_interval``: zero unless the opaque positions form a single
  standard-order interval, else the table value of the opaque restriction;
  zero on placeholder-only words.
* ``group_multiplicative``: the product of table values over the
  standard-order components of the opaque positions (empty product 1).
* ``lie_full`` / ``group_full``: table value of the opaque restriction,
  with 0 / 1 on placeholder-only words.
* ``generic``: a direct table on incomplete words, ``unit_value`` on
  placeholder-only words.

Duality with the coproducts of :mod:`bifc.words` gives the convolution
``star`` and the half-products ``prec`` and ``succ``; the preLie product is
``prec`` minus the flipped ``succ``.  Three exponentials solve
``M = counit + k prec M`` (sums over shaded noncrossing bipartitions),
``M = counit + M succ b`` (interval bipartitions) and the convolution
exponential with ``1/n!`` weights (labelled monotone bipartitions with
``1/|blocks|!``); for full-kind directions all three collapse to the sum
over all bipartitions.  :func:`oracle_sum` computes those bipartition sums
directly and independently.

All arithmetic is exact: values are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Mapping

from .bipartition import enumerate_bipartitions, monotone_block_weights
from .translucent import opaque_intervals
from .words import (
    Alphabet,
    IncompleteWord,
    _restrict_sorted,
    _translucidate_set,
    is_complete,
    is_placeholder_only,
    min_opaque,
    opaque_positions_w,
    restrict_word,
    translucent_positions_w,
    type_of,
)

LIE_INTERVAL = "lie_interval"
GROUP_MULTIPLICATIVE = "group_multiplicative"
LIE_FULL = "lie_full"
GROUP_FULL = "group_full"
GENERIC = "generic"

KINDS = (LIE_INTERVAL, GROUP_MULTIPLICATIVE, LIE_FULL, GROUP_FULL, GENERIC)
_LIE_KINDS = (LIE_INTERVAL, LIE_FULL)
_GROUP_KINDS = (GROUP_MULTIPLICATIVE, GROUP_FULL)

Q = Fraction


class MissingTableEntryError(KeyError):
    """A group-kind functional was asked for a word missing from its table."""


class Functional:
    """A linear functional determined by a kind and a finite word table."""

    __slots__ = ("kind", "alphabet", "table", "unit_value", "_cache")

    def __init__(
        self,
        kind: str,
        alphabet: Alphabet,
        table: Mapping[IncompleteWord, Fraction] | None = None,
        unit_value: Fraction | int | None = None,
    ):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")
        self.kind = kind
        self.alphabet = alphabet
        self.table = {w: Q(v) for w, v in (table or {}).items()}
        for w in self.table:
            if kind != GENERIC and not is_complete(w):
                raise ValueError(f"{kind} table keys must be complete words: {w.text!r}")
            if len(w) == 0:
                raise ValueError("the empty word belongs to the unit, not the table")
        if kind in _LIE_KINDS:
            forced = Q(0)
        elif kind in _GROUP_KINDS:
            forced = Q(1)
        else:
            forced = Q(unit_value) if unit_value is not None else Q(0)
        if unit_value is not None and Q(unit_value) != forced and kind != GENERIC:
            raise ValueError(f"unit value of a {kind} functional is forced to {forced}")
        self.unit_value = forced
        self._cache: dict[IncompleteWord, Fraction] = {}

    @classmethod
    def counit(cls, alphabet: Alphabet) -> "Functional":
        """1 on placeholder-only words, 0 elsewhere; the unit for star."""
        return cls(GENERIC, alphabet, {}, unit_value=1)

    @property
    def vanishes_on_units(self) -> bool:
        return self.unit_value == 0

    def _lookup(self, w: IncompleteWord) -> Fraction:
        try:
            return self.table[w]
        except KeyError:
            raise MissingTableEntryError(
                f"{self.kind} functional has no entry for {w.text!r}"
            ) from None

    def eval(self, w: IncompleteWord) -> Fraction:
        if self.kind == GENERIC:
            if is_placeholder_only(w):
                return self.unit_value
            return self.table.get(w, Q(0))
        try:
            return self._cache[w]
        except KeyError:
            pass
        value = self._eval_uncached(w)
        self._cache[w] = value
        return value

    def _eval_uncached(self, w: IncompleteWord) -> Fraction:
        if is_placeholder_only(w):
            return self.unit_value
        if self.kind == GROUP_MULTIPLICATIVE:
            components = opaque_intervals(type_of(w))
            if len(components) == 1 and len(components[0]) == len(w):
                return self._lookup(w)
            value = Q(1)
            for component in components:
                value *= self._lookup(_restrict_sorted(w, component))
            return value
        if self.kind == LIE_INTERVAL:
            components = opaque_intervals(type_of(w))
            if len(components) != 1:
                return Q(0)
            if len(components[0]) == len(w):
                return self.table.get(w, Q(0))
            return self.table.get(_restrict_sorted(w, components[0]), Q(0))
        opaque = opaque_positions_w(w)
        if len(opaque) == len(w):
            restricted = w
        else:
            restricted = _restrict_sorted(w, opaque)
        if self.kind == LIE_FULL:
            return self.table.get(restricted, Q(0))
        return self._lookup(restricted)  # GROUP_FULL

    def __repr__(self) -> str:
        return f"Functional({self.kind}, {len(self.table)} entries)"


class LazyProduct:
    """Functional defined pointwise by one of the dual products, memoized."""

    __slots__ = ("f", "g", "mode", "unit_value", "_memo")

    def __init__(self, f, g, mode: str):
        self.f, self.g, self.mode = f, g, mode
        if mode == "star":
            self.unit_value = f.unit_value * g.unit_value
        else:
            self.unit_value = Q(0)
        self._memo: dict[IncompleteWord, Fraction] = {}

    @property
    def vanishes_on_units(self) -> bool:
        return self.unit_value == 0

    def eval(self, w: IncompleteWord) -> Fraction:
        if w in self._memo:
            return self._memo[w]
        if self.mode == "star":
            value = star_eval(self.f, self.g, w)
        elif self.mode == "prec":
            value = prec_eval(self.f, self.g, w)
        else:
            value = succ_eval(self.f, self.g, w)
        self._memo[w] = value
        return value


def _cut_sets(w: IncompleteWord, keep_min: bool | None):
    """Kept position sets of the admissible cuts, optionally split at the
    lessdot-first opaque position (``True`` keeps it, ``False`` drops it)."""
    base = translucent_positions_w(w)
    free = opaque_positions_w(w)
    if keep_min is None:
        head: tuple[int, ...] = ()
    else:
        wmin = min_opaque(w)
        free = tuple(p for p in free if p != wmin)
        head = (wmin,) if keep_min else ()
    for bits in iproduct((False, True), repeat=len(free)):
        yield tuple(sorted(base + head + tuple(p for p, b in zip(free, bits) if b)))


def star_eval(f, g, w: IncompleteWord) -> Fraction:
    """Convolution ``(f star g)(w)``, dual to the decomposition coproduct."""
    total = Q(0)
    for kept in _cut_sets(w, None):
        left = f.eval(_restrict_sorted(w, kept))
        if left:
            total += left * g.eval(_translucidate_set(w, set(kept)))
    return total


def _check_half_product_args(f, g, op: str) -> None:
    if not f.vanishes_on_units and not g.vanishes_on_units:
        raise ValueError(
            f"{op} needs at least one factor vanishing on placeholder-only words"
        )


def prec_eval(f, g, w: IncompleteWord) -> Fraction:
    """Left half-product: cuts keeping the lessdot-first opaque letter left.

    The cut at the full position set pairs ``f`` with the unit value of
    ``g``, realizing ``f prec counit = f``; ``counit prec counit`` stays
    undefined.
    """
    _check_half_product_args(f, g, "prec")
    if is_placeholder_only(w):
        return Q(0)
    total = Q(0)
    for kept in _cut_sets(w, True):
        left = f.eval(_restrict_sorted(w, kept))
        if left:
            total += left * g.eval(_translucidate_set(w, set(kept)))
    return total


def succ_eval(f, g, w: IncompleteWord) -> Fraction:
    """Right half-product: the lessdot-first opaque letter goes right."""
    _check_half_product_args(f, g, "succ")
    if is_placeholder_only(w):
        return Q(0)
    total = Q(0)
    for kept in _cut_sets(w, False):
        left = f.eval(_restrict_sorted(w, kept))
        if left:
            total += left * g.eval(_translucidate_set(w, set(kept)))
    return total


def star(f, g) -> LazyProduct:
    return LazyProduct(f, g, "star")


def prec(f, g) -> LazyProduct:
    _check_half_product_args(f, g, "prec")
    return LazyProduct(f, g, "prec")


def succ(f, g) -> LazyProduct:
    _check_half_product_args(f, g, "succ")
    return LazyProduct(f, g, "succ")


def prelie_eval(f, g, w: IncompleteWord) -> Fraction:
    """preLie product ``(f prec g) - (g succ f)`` evaluated at ``w``."""
    if not f.vanishes_on_units or not g.vanishes_on_units:
        raise ValueError("the preLie product needs both factors to vanish on "
                         "placeholder-only words")
    return prec_eval(f, g, w) - succ_eval(g, f, w)


def prelie_interval_form(f: Functional, g: Functional, w: IncompleteWord) -> Fraction:
    """Closed form of the preLie product for interval-kind directions.

    For ``w`` whose opaque positions form one standard-order interval, sum
    ``f(w | I1 u I2) * g(w | J)`` over the splittings of the interval into a
    prefix ``I1``, a middle ``J`` and a suffix ``I2`` with ``I1, I2``
    nonempty; elsewhere the product vanishes.
    """
    if f.kind != LIE_INTERVAL or g.kind != LIE_INTERVAL:
        raise ValueError("closed form applies to lie_interval functionals")
    from .biset import standard_order

    components = opaque_intervals(type_of(w))
    if len(components) != 1:
        return Q(0)
    so = standard_order(w.sides)
    run = so.sort_positions(components[0])
    n = len(run)
    total = Q(0)
    for a in range(1, n):          # |I1| = a >= 1
        for b in range(1, n - a + 1):   # |J| = b >= 1, |I2| = n - a - b >= 1
            if n - a - b < 1:
                continue
            outer = run[:a] + run[a + b:]
            middle = run[a : a + b]
            total += f.eval(restrict_word(w, outer)) * g.eval(restrict_word(w, middle))
    return total


# ---------------------------------------------------------------------------
# exponentials

def _require_kind(f: Functional, kind: str, op: str) -> None:
    if f.kind != kind:
        raise ValueError(f"{op} expects a {kind} functional, got {f.kind}")


def exp_prec(k: Functional, max_len: int) -> Functional:
    """Solve ``M = counit + k prec M``; tabulated on complete words.

    The recursion sums, over the kept sets containing the lessdot-first
    opaque position, ``k`` on the restriction times ``M`` on the
    translucidation; it terminates because each step removes at least one
    opaque letter.
    """
    _require_kind(k, LIE_INTERVAL, "exp_prec")
    return Functional(GROUP_MULTIPLICATIVE, k.alphabet,
                      _left_fixed_point_table(k, max_len))


def _left_fixed_point_table(k: Functional, max_len: int) -> dict:
    memo: dict[IncompleteWord, Fraction] = {}

    def value(w: IncompleteWord) -> Fraction:
        if is_placeholder_only(w):
            return Q(1)
        try:
            return memo[w]
        except KeyError:
            pass
        total = Q(0)
        for kept in _cut_sets(w, True):
            coeff = k.eval(_restrict_sorted(w, kept))
            if coeff:
                total += coeff * value(_translucidate_set(w, set(kept)))
        memo[w] = total
        return total

    return {v: value(v) for v in k.alphabet.complete_words(max_len, min_len=1)}


@lru_cache(maxsize=4096)
def _interval_cuts(sides: str) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Kept sets of complete words whose complement is one standard-order run.

    For a complete word with side pattern ``sides``, these are exactly the
    cuts whose translucidation can carry a nonzero interval-kind value; the
    complement run is returned alongside.
    """
    from .biset import standard_order

    so = standard_order(sides)
    n = len(sides)
    out = []
    for start in range(n):
        for stop in range(start + 1, n + 1):
            comp = so.perm[start:stop]
            kept = tuple(sorted(set(range(1, n + 1)) - set(comp)))
            out.append((kept, tuple(sorted(comp))))
    return tuple(out)


def exp_succ(b: Functional, max_len: int) -> Functional:
    """Solve ``M = counit + M succ b``; tabulated on complete words."""
    _require_kind(b, LIE_INTERVAL, "exp_succ")
    memo: dict[IncompleteWord, Fraction] = {}

    def value(w: IncompleteWord) -> Fraction:
        if is_placeholder_only(w):
            return Q(1)
        try:
            return memo[w]
        except KeyError:
            pass
        total = Q(0)
        for kept in _cut_sets(w, False):
            coeff = b.eval(_translucidate_set(w, set(kept)))
            if coeff:
                total += value(_restrict_sorted(w, kept)) * coeff
        memo[w] = total
        return total

    table = {v: value(v) for v in b.alphabet.complete_words(max_len, min_len=1)}
    return Functional(GROUP_MULTIPLICATIVE, b.alphabet, table)


def _star_power_values(f, top: IncompleteWord, memo, cuts_cache,
                       interval_kind: bool) -> list[Fraction]:
    """Values ``f**(star n)(top)`` for ``n = 1..len(top)`` on a complete word.

    ``f`` must vanish on placeholder-only words, so the power series is
    finite.  With ``interval_kind`` set, only cuts whose dropped positions
    form one standard-order run can contribute and the others are skipped.
    """

    def power(n: int, u: IncompleteWord) -> Fraction:
        if n == 1:
            return f.eval(u)
        if n > len(u):
            return Q(0)
        key = (n, u)
        try:
            return memo[key]
        except KeyError:
            pass
        total = Q(0)
        pairs = cuts_cache.get(u)
        if pairs is None:
            if interval_kind:
                pairs = tuple(
                    (_restrict_sorted(u, kept), _restrict_sorted(u, comp))
                    for kept, comp in _interval_cuts(u.sides)
                )
            else:
                pairs = tuple(
                    (_restrict_sorted(u, kept), _translucidate_set(u, set(kept)))
                    for kept in _cut_sets(u, None)
                )
            cuts_cache[u] = pairs
        for left, right in pairs:
            coeff = f.eval(right)
            if coeff:
                total += power(n - 1, left) * coeff
        memo[key] = total
        return total

    return [power(n, top) for n in range(1, len(top) + 1)]


def exp_star(m: Functional, max_len: int) -> Functional:
    """Convolution exponential ``counit + sum(m**(star n) / n!)``."""
    _require_kind(m, LIE_INTERVAL, "exp_star")
    memo: dict = {}
    cuts: dict = {}
    table = {}
    for v in m.alphabet.complete_words(max_len, min_len=1):
        powers = _star_power_values(m, v, memo, cuts, interval_kind=True)
        table[v] = sum(
            (p / math.factorial(n) for n, p in enumerate(powers, start=1)), Q(0)
        )
    return Functional(GROUP_MULTIPLICATIVE, m.alphabet, table)


def log_star(M: Functional, max_len: int) -> Functional:
    """Convolution logarithm, the inverse of :func:`exp_star`.

    Alternating series ``sum((-1)**(n-1)/n * (M - counit)**(star n))``; the
    series is finite on every word.
    """
    _require_kind(M, GROUP_MULTIPLICATIVE, "log_star")

    class _Shifted:
        unit_value = Q(0)
        vanishes_on_units = True

        @staticmethod
        def eval(w: IncompleteWord) -> Fraction:
            if is_placeholder_only(w):
                return Q(0)
            return M.eval(w)

    memo: dict = {}
    cuts: dict = {}
    table = {}
    for v in M.alphabet.complete_words(max_len, min_len=1):
        powers = _star_power_values(_Shifted, v, memo, cuts, interval_kind=False)
        total = Q(0)
        for n, p in enumerate(powers, start=1):
            total += Q((-1) ** (n - 1), n) * p
        table[v] = total
    return Functional(LIE_INTERVAL, M.alphabet, table)


def exp_full(k: Functional, max_len: int) -> Functional:
    """Exponential of a full-kind direction; all three exponentials agree.

    Uses the left fixed-point recursion with full-kind evaluation; the value
    on a word is the sum over all bipartitions of its type of the product of
    ``k`` over the blocks.
    """
    _require_kind(k, LIE_FULL, "exp_full")
    memo: dict[IncompleteWord, Fraction] = {}

    def value(w: IncompleteWord) -> Fraction:
        if is_placeholder_only(w):
            return Q(1)
        try:
            return memo[w]
        except KeyError:
            pass
        total = Q(0)
        for kept in _cut_sets(w, True):
            coeff = k.eval(_restrict_sorted(w, kept))
            if coeff:
                total += coeff * value(_translucidate_set(w, set(kept)))
        memo[w] = total
        return total

    table = {v: value(v) for v in k.alphabet.complete_words(max_len, min_len=1)}
    return Functional(GROUP_FULL, k.alphabet, table)


# ---------------------------------------------------------------------------
# bipartition-sum oracle

def oracle_sum(k, w: IncompleteWord, cls: str) -> Fraction:
    """Brute-force bipartition sum over the given class of ``type_of(w)``.

    Weight 1 per bipartition, except the monotone class which weighs each
    labelled bipartition by ``1 / |blocks|!``.  This is the independent
    check for every exponential.
    """
    t = type_of(w)
    values: dict[tuple[int, ...], Fraction] = {}

    def block_value(block: tuple[int, ...]) -> Fraction:
        v = values.get(block)
        if v is None:
            v = k.eval(_restrict_sorted(w, block))
            values[block] = v
        return v

    if cls == "monotone":
        total = Q(0)
        for blocks, _count, weight in monotone_block_weights(t):
            num, den = weight.numerator, weight.denominator
            for block in blocks:
                v = block_value(block)
                num *= v.numerator
                if not num:
                    break
                den *= v.denominator
            if num:
                total += Q(num, den)
        return total
    total = Q(0)
    for pi in enumerate_bipartitions(t, cls):
        num, den = 1, 1
        for block in pi.blocks:
            v = block_value(block)
            num *= v.numerator
            if not num:
                break
            den *= v.denominator
        if num:
            total += Q(num, den)
    return total
