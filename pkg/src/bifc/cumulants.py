"""Moment-cumulant conversion for the three two-faced families.

Moments are the values of a unital functional on complete words; cumulants
come in three families, each defined by a bipartition class of the fully
opaque type of a word (standard order of its side pattern):

* ``bifree``      - noncrossing bipartitions,
* ``biboolean``   - interval bipartitions,
* ``bimonotone``  - labelled monotone bipartitions, weighted ``1/|blocks|!``.

In each case the moment of a word is the weighted sum over the class of the
product of cumulants of the block restrictions; the cumulants are recovered
by the triangular recursion that peels off the one-block term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .bipartition import enumerate_bipartitions, monotone_block_weights
from .functional import (
    Functional,
    GROUP_MULTIPLICATIVE,
    LIE_INTERVAL,
    exp_prec,
    exp_star,
    exp_succ,
)
from .translucent import fully_opaque
from .words import (Alphabet, EMPTY_WORD, IncompleteWord, _restrict_sorted,
                    is_complete)

Q = Fraction

FAMILIES = ("bifree", "biboolean", "bimonotone")
_FAMILY_CLASS = {"bifree": "nc", "biboolean": "interval"}


@dataclass
class MomentData:
    alphabet: Alphabet
    values: dict[IncompleteWord, Fraction]

    def __post_init__(self):
        self.values = {w: Q(v) for w, v in self.values.items()}
        for w in self.values:
            if not is_complete(w):
                raise ValueError(f"moments are keyed by complete words: {w.text!r}")
        self.values.setdefault(EMPTY_WORD, Q(1))
        if self.values[EMPTY_WORD] != 1:
            raise ValueError("the empty-word moment must be 1")

    def moment(self, w: IncompleteWord) -> Fraction:
        try:
            return self.values[w]
        except KeyError:
            raise KeyError(f"missing moment entry for {w.text!r}") from None


@dataclass
class CumulantData:
    family: str
    alphabet: Alphabet
    values: dict[IncompleteWord, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        self.values = {w: Q(v) for w, v in self.values.items()}
        for w in self.values:
            if not is_complete(w) or len(w) == 0:
                raise ValueError(
                    f"cumulants are keyed by nonempty complete words: {w.text!r}"
                )

    def cumulant(self, w: IncompleteWord) -> Fraction:
        try:
            return self.values[w]
        except KeyError:
            raise KeyError(f"missing cumulant entry for {w.text!r}") from None


def _class_terms(family: str, n: int, alpha: str):
    """Blocks-with-weight pairs of the family's class on the fully opaque type."""
    t = fully_opaque(alpha)
    if family == "bimonotone":
        for blocks, _count, weight in monotone_block_weights(t):
            yield blocks, weight
    else:
        for pi in enumerate_bipartitions(t, _FAMILY_CLASS[family]):
            yield pi.blocks, Q(1)


def _moment_from(family: str, w: IncompleteWord, lookup) -> Fraction:
    values: dict[tuple[int, ...], Fraction] = {}

    def block_value(block):
        v = values.get(block)
        if v is None:
            v = lookup(_restrict_sorted(w, block))
            values[block] = v
        return v

    total = Q(0)
    for blocks, weight in _class_terms(family, len(w), w.sides):
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


def cumulants_to_moments(c: CumulantData, max_len: int) -> MomentData:
    """Weighted bipartition sums of cumulant products, up to ``max_len``."""
    values = {}
    for w in c.alphabet.complete_words(max_len, min_len=1):
        values[w] = _moment_from(c.family, w, c.cumulant)
    return MomentData(c.alphabet, values)


def moments_to_cumulants(m: MomentData, family: str, max_len: int) -> CumulantData:
    """Triangular inversion of :func:`cumulants_to_moments`.

    The one-block bipartition carries weight 1 in every family, so the
    cumulant of a word is its moment minus the other terms, which only
    involve shorter words.
    """
    out = CumulantData(family, m.alphabet)
    for n in range(1, max_len + 1):
        for w in m.alphabet.complete_words(n, min_len=n):
            values: dict[tuple[int, ...], Fraction] = {}

            def block_value(block, w=w, values=values):
                v = values.get(block)
                if v is None:
                    v = out.cumulant(_restrict_sorted(w, block))
                    values[block] = v
                return v

            rest = Q(0)
            for blocks, weight in _class_terms(family, n, w.sides):
                if len(blocks) == 1:
                    continue
                num, den = weight.numerator, weight.denominator
                for block in blocks:
                    v = block_value(block)
                    num *= v.numerator
                    if not num:
                        break
                    den *= v.denominator
                if num:
                    rest += Q(num, den)
            out.values[w] = m.moment(w) - rest
    return out


def moment_functional(m: MomentData, max_len: int) -> Functional:
    """The multiplicative functional tabulating the moments on complete words."""
    table = {
        w: m.moment(w) for w in m.alphabet.complete_words(max_len, min_len=1)
    }
    return Functional(GROUP_MULTIPLICATIVE, m.alphabet, table)


def cumulant_functional(c: CumulantData) -> Functional:
    """The interval-kind functional tabulating a cumulant family."""
    return Functional(LIE_INTERVAL, c.alphabet, c.values)


@dataclass
class CheckLine:
    family: str
    word: IncompleteWord
    expected: Fraction
    got: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def __str__(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        return (f"{self.family:11s} {self.word.text!r:30s} moment={self.expected} "
                f"exp={self.got} {status}")


def check_against_exponentials(m: MomentData, max_len: int) -> list[CheckLine]:
    """Compare the moment functional with the three exponentials.

    Derives the cumulant family tables from the moments, exponentiates each
    with its matching exponential (bifree with the left fixed point,
    biboolean with the right one, bimonotone with the convolution
    exponential) and reports both values per complete word.
    """
    report = []
    exps = {"bifree": exp_prec, "biboolean": exp_succ, "bimonotone": exp_star}
    for family in FAMILIES:
        cums = moments_to_cumulants(m, family, max_len)
        rebuilt = exps[family](cumulant_functional(cums), max_len)
        for w in m.alphabet.complete_words(max_len, min_len=1):
            report.append(CheckLine(family, w, m.moment(w), rebuilt.eval(w)))
    return report


def independence_diagnostic(
    m: MomentData,
    family: str,
    tags: Mapping[str, int],
    max_len: int,
) -> IncompleteWord | None:
    """Largest mixed word with a nonvanishing cumulant, or None.

    ``tags`` assigns each variable to one of two groups; a word is mixed if
    it uses both groups.  Vanishing of all mixed bifree (resp. biboolean)
    cumulants characterizes bifreeness (resp. biboolean independence) of the
    two groups.  Words are scanned from long to short, ties broken by the
    deterministic word order.
    """
    if family not in ("bifree", "biboolean"):
        raise ValueError("mixed-cumulant diagnostics cover bifree and biboolean")
    cums = moments_to_cumulants(m, family, max_len)
    witnesses = []
    for w, value in cums.values.items():
        groups = {tags[x] for x in w.letters}
        if len(groups) > 1 and value != 0:
            witnesses.append(w)
    if not witnesses:
        return None
    return max(witnesses, key=lambda w: (len(w), w.letters))
