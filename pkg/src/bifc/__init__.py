"""Exact combinatorics of two-faced moment-cumulant relations.

The package models words on left/right placeholders and variables
(translucent and incomplete words), the bipartition classes that govern
bifree, biBoolean and type-I bimonotone independence, the decomposition
coproduct on incomplete words with its two-sided splitting, and the
resulting exponential maps between cumulant directions and moment
functionals.  All values are exact rationals.
"""

__version__ = "0.1.0"

from .biset import LEFT, RIGHT, StdOrder, restrict_lr, standard_order
from .translucent import (
    TranslucentWord,
    compose,
    exchange,
    factorizations,
    identity,
    fully_opaque,
    opaque_intervals,
    opaque_positions,
    restrict,
    split,
    source,
    target,
    translucent_positions,
    translucidate,
)
from .bipartition import (
    Bipartition,
    LabeledBipartition,
    compose_bipartitions,
    enumerate_bipartitions,
    is_interval,
    is_monotone,
    is_noncrossing,
    is_shaded,
    make_bipartition,
    make_labeled,
    restrict_bipartition,
    translucidate_blocks,
)
from .words import (
    Alphabet,
    IncompleteWord,
    WordSum,
    compose_words,
    coproduct,
    coproduct_left,
    coproduct_right,
    horizontal_product,
    opaque_factorize,
    reassemble,
    restrict_word,
    translucidate_word,
    type_of,
)
from .functional import (
    Functional,
    exp_full,
    exp_prec,
    exp_star,
    exp_succ,
    log_star,
    oracle_sum,
    prec_eval,
    prelie_eval,
    star_eval,
    succ_eval,
)
from .cumulants import (
    CumulantData,
    MomentData,
    check_against_exponentials,
    cumulants_to_moments,
    moments_to_cumulants,
)

__all__ = [name for name in dir() if not name.startswith("_")]
