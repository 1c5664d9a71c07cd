"""Exact structure of intersections of deleted digits Cantor sets.

Thin re-export of the native module; every function takes plain ints,
digit lists and code strings like "02(20)" or "3/4" and returns dicts
with exact fractions rendered as "p/q" strings.
"""

from ._core import (
    CantorError,
    abs_canonicalize,
    boxcount,
    canon,
    classify,
    convert,
    equivalent,
    g_beta,
    gamma_scale,
    generate_nonequivalent,
    intersect,
    is_finite,
    offsets,
    psi,
    rational_equivalent,
    selfsim,
    sigma,
    slice,
    strongly_periodic,
    sumset_decompose,
    thue_morse_bits,
    transport,
    truncate,
    uniform_hat,
)

__all__ = [
    "CantorError",
    "abs_canonicalize",
    "boxcount",
    "canon",
    "classify",
    "convert",
    "equivalent",
    "g_beta",
    "gamma_scale",
    "generate_nonequivalent",
    "intersect",
    "is_finite",
    "offsets",
    "psi",
    "rational_equivalent",
    "selfsim",
    "sigma",
    "slice",
    "strongly_periodic",
    "sumset_decompose",
    "thue_morse_bits",
    "transport",
    "truncate",
    "uniform_hat",
]
