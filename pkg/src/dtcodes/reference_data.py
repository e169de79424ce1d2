"""Recorded reference values used by the verification suite.

Everything here is a plain literal that the library is expected to
reproduce from scratch: guaranteed-existence lengths for the averaging
bound, the optimal minimum weight of double Toeplitz codes per length,
equivalence-class counts, class representatives, and generator rows
with known minimum weights.  Tests and the ``verify-tables`` command
recompute each quantity and compare against these tables.

Conventions:

- ``GUARANTEED_LENGTH[q][d]`` is the smallest even length at which the
  averaging bound certifies a double Toeplitz code of minimum weight
  at least ``d`` (and keeps certifying at every larger even length).
- ``OPTIMAL_MIN_WEIGHT[q][n]`` is the largest minimum weight among all
  double Toeplitz [n, n/2] codes over F_q.
- ``CLASS_COUNTS[q][n]`` is a triple (dt_only, dc, nc): equivalence
  classes of optimal codes containing no circulant structure, classes
  containing a double circulant member, and classes containing a
  double negacirculant but no double circulant member.
- ``DC_CLASS_ROWS`` / ``NC_CLASS_ROWS`` give one first row per
  (nega)circulant class, as vector literals.
- ``DT_CLASS_TRIPLES`` gives one triple literal per class that has no
  circulant or negacirculant member.
- ``MIN_WEIGHT_WITNESSES`` lists (q, n, d, spec) records where ``spec``
  is a circulant literal ``C:(r)`` / ``N:(r)`` or a triple literal
  ``t;a;b`` whose code has minimum weight exactly ``d``.
"""

from __future__ import annotations

from typing import Iterator

from .gf import GF
from .linear import LinearCode
from .structured import (
    double_circulant_code,
    double_negacirculant_code,
    double_toeplitz_code,
    parse_circulant,
    parse_triple,
)

__all__ = [
    "GUARANTEED_LENGTH",
    "OPTIMAL_MIN_WEIGHT",
    "CLASS_COUNTS",
    "DC_CLASS_ROWS",
    "NC_CLASS_ROWS",
    "DT_CLASS_TRIPLES",
    "MIN_WEIGHT_WITNESSES",
    "build_code",
    "iter_weight_checks",
]


# Smallest even n at which the averaging bound certifies minimum weight
# >= d, for d = 5..50.
GUARANTEED_LENGTH: dict[int, dict[int, int]] = {
    2: {
        5: 30, 6: 40, 7: 48, 8: 56, 9: 66, 10: 74,
        11: 84, 12: 92, 13: 102, 14: 110, 15: 120, 16: 128, 17: 138,
        18: 146, 19: 156, 20: 164, 21: 172, 22: 182, 23: 190, 24: 200,
        25: 208, 26: 218, 27: 226, 28: 236, 29: 244, 30: 254, 31: 264,
        32: 272, 33: 282, 34: 290, 35: 300, 36: 308, 37: 318, 38: 326,
        39: 336, 40: 344, 41: 354, 42: 362, 43: 372, 44: 380, 45: 390,
        46: 398, 47: 408, 48: 416, 49: 426, 50: 434,
    },
    3: {
        5: 20, 6: 26, 7: 32, 8: 38, 9: 44, 10: 50,
        11: 56, 12: 62, 13: 68, 14: 76, 15: 82, 16: 88, 17: 94,
        18: 100, 19: 106, 20: 112, 21: 118, 22: 124, 23: 130, 24: 138,
        25: 144, 26: 150, 27: 156, 28: 162, 29: 168, 30: 174, 31: 180,
        32: 186, 33: 194, 34: 200, 35: 206, 36: 212, 37: 218, 38: 224,
        39: 230, 40: 236, 41: 244, 42: 250, 43: 256, 44: 262, 45: 268,
        46: 274, 47: 280, 48: 286, 49: 294, 50: 300,
    },
    4: {
        5: 16, 6: 22, 7: 26, 8: 32, 9: 38, 10: 42,
        11: 48, 12: 52, 13: 58, 14: 64, 15: 68, 16: 74, 17: 78,
        18: 84, 19: 90, 20: 94, 21: 100, 22: 104, 23: 110, 24: 116,
        25: 120, 26: 126, 27: 132, 28: 136, 29: 142, 30: 146, 31: 152,
        32: 158, 33: 162, 34: 168, 35: 174, 36: 178, 37: 184, 38: 188,
        39: 194, 40: 200, 41: 204, 42: 210, 43: 216, 44: 220, 45: 226,
        46: 230, 47: 236, 48: 242, 49: 246, 50: 252,
    },
}


# Largest minimum weight among double Toeplitz [n, n/2] codes.
OPTIMAL_MIN_WEIGHT: dict[int, dict[int, int]] = {
    2: {
        4: 2, 6: 3, 8: 4, 10: 4, 12: 4, 14: 4, 16: 5, 18: 6, 20: 6,
        22: 7, 24: 8, 26: 7, 28: 8, 30: 8, 32: 8, 34: 8, 36: 8, 38: 8,
        40: 9,
    },
    3: {
        4: 3, 6: 3, 8: 4, 10: 5, 12: 6, 14: 6, 16: 6, 18: 6, 20: 7,
        22: 8, 24: 9, 26: 8, 28: 9,
    },
    4: {
        4: 3, 6: 4, 8: 4, 10: 5, 12: 5, 14: 6, 16: 6, 18: 7, 20: 8,
        22: 8, 24: 9,
    },
}


# Equivalence-class counts (dt_only, dc, nc) of optimal codes.  Lengths
# whose full classification is out of desk-scale reach are omitted.
CLASS_COUNTS: dict[int, dict[int, tuple[int, int, int]]] = {
    2: {
        4: (0, 2, 0), 6: (0, 1, 0), 8: (0, 1, 0), 10: (0, 2, 0),
        12: (4, 4, 0), 14: (75, 4, 0), 16: (0, 1, 0), 18: (0, 1, 0),
        20: (0, 3, 0), 22: (0, 1, 0), 24: (0, 1, 0), 26: (2, 1, 0),
        28: (0, 1, 0), 30: (0, 5, 0), 32: (1, 30, 0), 34: (2, 52, 0),
        36: (347, 403, 0), 38: (118328, 415, 0), 40: (231, 15, 0),
    },
    3: {
        4: (0, 0, 1), 6: (1, 2, 0), 8: (0, 3, 0), 10: (0, 1, 0),
        12: (0, 0, 1), 14: (0, 1, 0), 16: (104, 7, 5), 18: (156189, 57, 0),
        20: (27, 5, 11), 22: (1, 2, 0), 24: (0, 0, 2), 26: (3186, 376, 0),
    },
    4: {
        4: (0, 1, 0), 6: (0, 1, 0), 8: (7, 6, 0), 10: (2, 2, 0),
        12: (6864, 13, 0), 14: (360, 19, 0), 18: (2502, 15, 0),
        20: (0, 4, 0),
    },
}


# One circulant first row per double circulant class of optimal codes.
DC_CLASS_ROWS: dict[int, dict[int, tuple[str, ...]]] = {
    2: {
        4: ("(1,0)", "(1,1)"),
        6: ("(1,1,0)",),
        8: ("(1,1,1,0)",),
        10: ("(1,1,1,0,0)", "(1,1,1,1,0)"),
        12: (
            "(1,1,1,0,0,0)", "(1,1,0,1,0,0)", "(1,1,1,0,1,0)",
            "(1,1,1,1,1,0)",
        ),
        14: (
            "(1,1,1,0,0,0,0)", "(1,1,0,1,0,0,0)", "(1,1,1,1,0,0,0)",
            "(1,1,1,1,1,1,0)",
        ),
        16: ("(1,1,1,0,1,0,0,0)",),
        18: ("(1,1,1,1,0,0,1,0,0)",),
        20: (
            "(1,1,1,1,0,1,0,0,0,0)", "(1,1,1,0,1,1,0,0,0,0)",
            "(1,1,1,1,1,0,0,1,0,0)",
        ),
        22: ("(1,1,1,0,1,1,0,1,0,0,0)",),
        24: ("(1,1,0,1,1,1,1,0,1,0,0,0)",),
        26: ("(1,1,0,1,0,1,0,1,1,0,0,0,0)",),
        28: ("(1,1,1,0,1,0,1,1,1,0,0,0,0,0)",),
        30: (
            "(1,1,1,0,1,1,1,0,0,0,1,0,0,0,0)",
            "(1,0,1,1,0,1,1,1,0,0,1,0,0,0,0)",
            "(1,1,0,1,0,1,0,1,1,0,1,0,0,0,0)",
            "(1,1,0,0,1,0,1,1,1,0,1,0,0,0,0)",
            "(1,1,1,1,0,1,1,1,1,1,1,0,1,0,0)",
        ),
        32: (
            "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0)",
            "(1,1,1,1,1,0,1,0,0,1,0,0,0,0,0,0)",
            "(1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0)",
            "(1,1,1,0,1,1,0,1,0,1,0,0,0,0,0,0)",
            "(1,1,1,1,0,0,1,1,0,1,0,0,0,0,0,0)",
            "(1,1,1,0,1,0,1,1,0,1,0,0,0,0,0,0)",
            "(1,0,1,1,1,0,1,1,0,1,0,0,0,0,0,0)",
            "(1,1,0,0,1,1,1,1,0,1,0,0,0,0,0,0)",
            "(1,1,0,1,1,1,0,0,1,1,0,0,0,0,0,0)",
            "(1,1,1,1,1,0,1,0,0,0,1,0,0,0,0,0)",
            "(1,1,0,1,1,1,1,0,0,0,1,0,0,0,0,0)",
            "(1,1,0,1,0,1,1,1,0,0,1,0,0,0,0,0)",
            "(1,0,1,1,0,1,1,1,0,0,1,0,0,0,0,0)",
            "(1,0,0,1,1,1,1,1,0,0,1,0,0,0,0,0)",
            "(1,1,1,1,0,1,0,0,1,0,1,0,0,0,0,0)",
            "(1,1,0,0,1,1,1,0,1,0,1,0,0,0,0,0)",
            "(1,1,1,1,0,0,0,1,1,0,1,0,0,0,0,0)",
            "(1,1,1,0,0,1,0,1,1,0,1,0,0,0,0,0)",
            "(1,0,1,1,0,1,0,1,1,0,1,0,0,0,0,0)",
            "(1,1,1,0,1,1,1,1,1,0,1,0,0,0,0,0)",
            "(1,1,1,0,0,1,1,0,0,1,1,0,0,0,0,0)",
            "(1,1,1,1,1,0,1,1,0,1,1,0,0,0,0,0)",
            "(1,0,0,1,1,1,1,1,1,0,0,1,0,0,0,0)",
            "(1,1,1,1,0,1,1,0,1,1,0,1,0,0,0,0)",
            "(1,1,1,0,1,1,0,1,1,1,0,1,0,0,0,0)",
            "(1,0,1,1,1,1,0,1,1,1,0,1,0,0,0,0)",
            "(1,1,0,1,1,0,1,1,1,1,0,1,0,0,0,0)",
            "(1,1,1,1,1,1,0,0,1,0,1,1,0,0,0,0)",
            "(1,1,1,1,1,0,0,0,1,0,0,0,1,0,0,0)",
            "(1,1,1,1,1,1,0,0,1,1,0,0,1,0,0,0)",
        ),
    },
    3: {
        16: (
            "(1,2,2,1,1,0,0,0)", "(1,1,1,1,0,1,0,0)", "(1,1,2,2,0,1,0,0)",
            "(1,2,1,1,1,1,0,0)", "(1,2,2,2,2,1,0,0)", "(1,1,2,0,1,0,1,0)",
            "(1,1,2,1,1,0,1,0)",
        ),
        18: (
            "(1,2,1,1,1,0,0,0,0)", "(1,1,2,1,1,0,0,0,0)",
            "(1,2,2,1,1,0,0,0,0)", "(1,2,2,2,1,0,0,0,0)",
            "(1,1,1,1,0,1,0,0,0)", "(1,2,1,1,0,1,0,0,0)",
            "(1,1,2,1,0,1,0,0,0)", "(1,2,2,1,0,1,0,0,0)",
            "(1,2,1,2,0,1,0,0,0)", "(1,2,2,2,0,1,0,0,0)",
            "(1,2,2,0,1,1,0,0,0)", "(1,2,0,1,1,1,0,0,0)",
            "(1,2,1,1,1,1,0,0,0)", "(1,1,2,1,1,1,0,0,0)",
            "(1,1,2,2,1,1,0,0,0)", "(1,2,1,0,2,1,0,0,0)",
            "(1,2,2,1,1,2,0,0,0)", "(1,1,2,1,2,2,0,0,0)",
            "(1,1,1,1,0,0,1,0,0)", "(1,2,1,1,0,0,1,0,0)",
            "(1,2,2,1,0,0,1,0,0)", "(1,1,1,2,0,0,1,0,0)",
            "(1,2,1,2,0,0,1,0,0)", "(1,1,2,2,0,0,1,0,0)",
            "(1,2,2,2,0,0,1,0,0)", "(1,1,1,1,1,0,1,0,0)",
            "(1,2,2,1,1,0,1,0,0)", "(1,1,0,2,1,0,1,0,0)",
            "(1,0,1,2,1,0,1,0,0)", "(1,1,2,2,1,0,1,0,0)",
            "(1,2,2,2,1,0,1,0,0)", "(1,2,0,2,2,0,1,0,0)",
            "(1,2,1,1,1,1,1,0,0)", "(1,1,2,1,1,1,1,0,0)",
            "(1,2,1,2,1,1,1,0,0)", "(1,1,2,2,1,1,1,0,0)",
            "(1,2,1,1,2,1,1,0,0)", "(1,2,2,2,2,1,1,0,0)",
            "(1,2,1,2,0,2,1,0,0)", "(1,2,2,2,1,2,1,0,0)",
            "(1,2,2,1,2,2,1,0,0)", "(1,2,2,2,2,2,1,0,0)",
            "(1,2,1,2,1,0,2,0,0)", "(1,2,2,2,1,0,2,0,0)",
            "(1,1,1,2,2,0,2,0,0)", "(1,2,2,2,2,0,2,0,0)",
            "(1,2,2,1,1,1,2,0,0)", "(1,1,1,2,1,1,2,0,0)",
            "(1,1,1,1,2,1,2,0,0)", "(1,1,2,1,1,2,2,0,0)",
            "(1,2,1,2,1,0,1,1,0)", "(1,1,1,2,2,0,1,1,0)",
            "(1,2,1,2,2,0,1,1,0)", "(1,2,1,2,2,1,1,1,0)",
            "(1,2,2,2,1,2,1,1,0)", "(1,2,2,1,2,2,1,1,0)",
            "(1,2,1,2,2,2,1,1,0)",
        ),
        20: (
            "(1,2,1,1,0,1,1,0,0,0)", "(1,1,1,0,1,1,2,0,0,0)",
            "(1,1,1,0,2,1,2,0,0,0)", "(1,0,2,1,2,1,0,1,0,0)",
            "(1,2,2,1,2,0,1,0,1,0)",
        ),
        22: (
            "(1,1,1,2,1,2,0,0,1,0,0)", "(1,2,1,1,1,2,2,2,1,2,0)",
        ),
    },
    4: {
        4: ("(1,w)",),
        6: ("(1,w,1)",),
        8: (
            "(1,1,1,0)", "(1,w,1,0)", "(1,1,w,0)", "(1,v,w,0)",
            "(1,w,1,1)", "(1,w,w,1)",
        ),
        10: ("(1,w,1,w,0)", "(1,v,1,w,0)"),
        12: (
            "(1,w,1,1,0,0)", "(1,v,1,1,0,0)", "(1,1,1,w,0,0)",
            "(1,1,w,0,1,0)", "(1,v,w,0,1,0)", "(1,1,v,0,1,0)",
            "(1,w,w,1,1,0)", "(1,v,w,1,1,0)", "(1,w,v,1,1,0)",
            "(1,v,v,1,1,0)", "(1,v,w,w,1,0)", "(1,v,w,1,1,1)",
            "(1,w,v,w,1,1)",
        ),
        14: (
            "(1,w,1,1,1,0,0)", "(1,v,1,1,1,0,0)", "(1,1,w,1,1,0,0)",
            "(1,w,w,1,1,0,0)", "(1,1,v,1,1,0,0)", "(1,v,1,w,1,0,0)",
            "(1,w,v,w,1,0,0)", "(1,v,1,1,w,0,0)", "(1,v,v,1,w,0,0)",
            "(1,v,1,w,w,0,0)", "(1,1,w,v,w,0,0)", "(1,w,w,v,w,0,0)",
            "(1,v,v,v,w,0,0)", "(1,v,w,1,1,1,0)", "(1,v,1,w,1,1,0)",
            "(1,w,1,v,1,1,0)", "(1,1,w,1,w,w,0)", "(1,w,v,w,1,1,1)",
            "(1,v,w,v,1,1,1)",
        ),
        18: (
            "(1,v,1,w,1,0,1,0,0)", "(1,1,v,w,1,0,1,0,0)",
            "(1,1,w,v,1,0,1,0,0)", "(1,v,w,w,0,1,1,0,0)",
            "(1,v,v,w,0,1,1,0,0)", "(1,v,w,w,1,0,w,0,0)",
            "(1,1,v,1,1,1,w,0,0)", "(1,w,1,w,1,1,w,0,0)",
            "(1,v,1,w,1,1,w,0,0)", "(1,v,0,1,w,1,w,0,0)",
            "(1,w,w,1,w,1,w,0,0)", "(1,v,v,w,1,1,1,1,0)",
            "(1,1,v,v,w,1,1,1,0)", "(1,w,w,w,1,w,1,1,0)",
            "(1,w,w,v,w,w,1,1,0)",
        ),
        20: (
            "(1,v,1,1,w,w,v,w,0,0)", "(1,w,v,0,v,w,1,0,1,0)",
            "(1,w,v,w,w,w,v,w,1,0)", "(1,v,w,v,w,v,1,0,w,0)",
        ),
    },
}


# One negacirculant first row per negacirculant-only class (F3; over F2
# and F4 negation is trivial, so negacirculant coincides with circulant).
NC_CLASS_ROWS: dict[int, dict[int, tuple[str, ...]]] = {
    3: {
        4: ("(1,1)",),
        12: ("(1,2,1,1,1,0)",),
        16: (
            "(1,1,2,1,1,0,0,0)", "(1,2,2,1,1,0,0,0)", "(1,2,1,2,0,1,0,0)",
            "(1,1,1,0,1,1,0,0)", "(1,2,2,2,1,1,0,0)",
        ),
        20: (
            "(1,1,2,1,1,0,1,0,0,0)", "(1,2,1,1,0,1,1,0,0,0)",
            "(1,1,1,2,0,1,1,0,0,0)", "(1,2,2,2,0,1,1,0,0,0)",
            "(1,2,2,2,0,1,2,0,0,0)", "(1,2,1,0,1,1,2,0,0,0)",
            "(1,1,1,2,1,0,0,1,0,0)", "(1,0,1,2,2,1,0,1,0,0)",
            "(1,2,2,2,2,1,0,1,0,0)", "(1,0,2,2,2,2,0,1,0,0)",
            "(1,1,2,2,0,1,1,1,0,0)",
        ),
        24: (
            "(1,1,1,1,2,2,0,1,0,1,0,0)", "(1,1,1,1,2,2,1,1,2,1,2,0)",
        ),
    },
}


# One triple literal per class with no (nega)circulant member.
DT_CLASS_TRIPLES: dict[int, dict[int, tuple[str, ...]]] = {
    2: {
        12: (
            "0;(1,1,0,1,0);(1,1,1,0,0)",
            "0;(1,0,1,1,0);(1,1,1,0,0)",
            "0;(0,1,1,0,1);(1,1,1,0,0)",
            "0;(0,1,1,0,1);(1,1,0,1,0)",
        ),
        14: (
            "0;(1,1,0,1,0,0);(1,1,1,0,0,0)",
            "0;(1,0,1,1,0,0);(1,1,1,0,0,0)",
            "0;(0,1,1,1,0,0);(1,1,0,1,0,0)",
            "0;(1,1,1,1,0,0);(1,1,1,0,0,0)",
            "0;(1,1,1,1,0,0);(1,1,0,1,0,0)",
            "0;(1,1,0,0,1,0);(1,1,1,0,0,0)",
            "0;(1,1,0,0,1,0);(1,1,1,1,0,0)",
            "0;(1,0,1,0,1,0);(0,1,1,1,0,0)",
            "0;(0,1,1,0,1,0);(1,1,1,0,0,0)",
            "0;(0,1,1,0,1,0);(1,1,0,1,0,0)",
            "0;(0,1,1,0,1,0);(0,1,1,1,0,0)",
            "0;(0,1,1,0,1,0);(1,0,1,0,1,0)",
            "0;(0,1,1,0,1,0);(0,1,1,0,1,0)",
            "0;(1,1,1,0,1,0);(1,1,0,1,0,0)",
            "0;(1,1,1,0,1,0);(0,1,1,0,1,0)",
            "0;(1,0,0,1,1,0);(1,1,0,1,0,0)",
            "0;(1,0,0,1,1,0);(1,0,1,1,0,0)",
            "0;(1,0,0,1,1,0);(1,1,1,1,0,0)",
            "0;(0,1,0,1,1,0);(1,0,1,1,0,0)",
            "0;(0,1,0,1,1,0);(0,1,1,1,0,0)",
            "0;(0,1,0,1,1,0);(1,1,0,0,1,0)",
            "0;(0,1,0,1,1,0);(1,0,1,0,1,0)",
            "0;(1,1,0,1,1,0);(1,0,1,1,0,0)",
            "0;(1,1,0,1,1,0);(0,1,1,0,1,0)",
            "0;(0,0,1,1,1,0);(1,1,0,1,0,0)",
            "0;(0,0,1,1,1,0);(1,0,1,1,0,0)",
            "0;(0,1,1,1,1,0);(1,1,0,0,1,0)",
            "0;(0,1,1,1,1,0);(1,0,1,0,1,0)",
            "0;(0,1,1,1,1,0);(0,1,1,0,1,0)",
            "0;(0,1,1,1,1,0);(0,1,0,1,1,0)",
            "0;(0,1,1,1,1,0);(1,1,0,1,1,0)",
            "0;(1,1,1,1,1,0);(1,1,1,0,0,0)",
            "0;(1,1,1,1,1,0);(0,1,1,1,0,0)",
            "0;(1,1,1,1,1,0);(1,1,0,0,1,0)",
            "0;(1,1,0,0,0,1);(1,1,1,1,0,0)",
            "0;(1,1,0,0,0,1);(1,0,0,1,1,0)",
            "0;(1,1,0,0,0,1);(1,0,1,1,1,0)",
            "0;(1,1,0,0,0,1);(1,1,1,1,1,0)",
            "0;(1,0,1,0,0,1);(1,1,1,0,1,0)",
            "0;(1,0,1,0,0,1);(1,0,0,1,1,0)",
            "0;(0,1,1,0,0,1);(1,1,1,1,0,0)",
            "0;(0,1,1,0,0,1);(1,1,1,1,1,0)",
            "0;(1,1,1,0,0,1);(1,1,0,1,0,0)",
            "0;(1,1,1,0,0,1);(1,1,0,0,1,0)",
            "0;(1,1,1,0,0,1);(0,1,1,0,1,0)",
            "0;(1,0,0,1,0,1);(1,1,0,0,1,0)",
            "0;(1,0,0,1,0,1);(1,1,1,0,1,0)",
            "0;(0,1,0,1,0,1);(1,1,1,0,0,0)",
            "0;(0,0,1,1,0,1);(1,1,0,1,0,0)",
            "0;(1,0,1,1,0,1);(0,0,1,1,0,1)",
            "0;(0,1,1,1,0,1);(1,0,0,1,1,0)",
            "0;(0,1,1,1,0,1);(0,1,1,1,0,1)",
            "0;(1,1,1,1,0,1);(0,0,1,1,1,0)",
            "0;(1,0,0,0,1,1);(1,1,0,1,0,0)",
            "0;(1,0,1,0,1,1);(0,1,0,1,1,0)",
            "0;(1,0,1,0,1,1);(0,1,1,1,1,0)",
            "0;(0,1,1,0,1,1);(1,1,1,0,1,0)",
            "0;(0,1,1,0,1,1);(1,0,1,1,0,1)",
            "0;(1,1,1,0,1,1);(1,0,1,1,0,0)",
            "0;(1,0,0,1,1,1);(1,0,1,0,0,1)",
            "0;(1,0,0,1,1,1);(1,1,0,0,1,1)",
            "0;(0,1,0,1,1,1);(1,0,1,0,1,1)",
            "0;(1,1,0,1,1,1);(1,1,1,0,0,0)",
            "0;(1,1,0,1,1,1);(0,1,0,1,1,0)",
            "0;(1,1,0,1,1,1);(0,1,1,1,0,1)",
            "0;(1,0,1,1,1,1);(1,1,0,1,1,0)",
            "0;(1,0,1,1,1,1);(1,1,1,0,1,1)",
            "0;(1,0,1,1,1,1);(1,1,0,1,1,1)",
            "0;(0,1,1,1,1,1);(1,0,1,0,1,0)",
            "1;(0,0,1,0,1,0);(1,1,0,0,0,0)",
            "1;(1,0,1,0,1,0);(1,0,1,0,1,0)",
            "1;(0,1,0,0,0,1);(1,0,0,1,0,0)",
            "1;(1,1,1,0,0,1);(1,0,1,1,1,0)",
            "1;(1,1,0,1,0,1);(1,0,1,0,0,0)",
            "1;(0,1,1,1,1,1);(1,1,1,0,0,0)",
        ),
        26: (
            "0;(1,0,0,1,1,0,1,1,0,0,1,0);(1,0,1,0,0,1,1,0,1,1,0,0)",
            "0;(0,1,0,1,0,1,0,0,1,1,0,1);(1,1,0,1,1,0,0,1,0,1,0,1)",
        ),
        32: (
            "1;(0,0,1,0,1,0,1,1,0,0,0,1,0,1,1);(1,1,1,0,0,1,1,0,0,0,0,0,1,0,1)",
        ),
        34: (
            "1;(0,0,1,0,1,0,1,1,0,0,0,1,0,1,1,1);(1,1,1,0,0,1,1,0,0,0,0,0,1,0,1,0)",
            "1;(0,1,0,1,1,0,0,0,0,1,0,1,0,1,1,1);(1,0,1,1,0,0,1,1,1,1,0,1,1,1,0,0)",
        ),
    },
    3: {
        6: ("1;(1,0);(2,1)",),
        20: (
            "0;(0,0,1,1,2,1,1,0,1);(1,2,0,1,1,2,2,2,2)",
            "0;(0,0,1,2,1,0,1,1,1);(1,2,2,0,2,1,2,0,0)",
            "0;(0,1,2,1,1,1,1,0,0);(2,0,0,2,2,2,2,1,2)",
            "0;(0,1,1,1,1,2,1,0,0);(1,0,0,2,1,2,2,2,2)",
            "0;(0,1,2,1,0,1,1,1,0);(2,2,2,2,0,2,1,2,0)",
            "0;(0,1,0,2,1,1,1,1,0);(2,0,1,1,1,1,2,0,1)",
            "0;(0,1,0,2,1,2,1,1,0);(1,0,2,2,1,2,1,0,2)",
            "0;(0,1,2,1,1,2,1,0,1);(1,0,2,0,2,1,2,2,1)",
            "0;(0,1,1,1,1,2,2,0,1);(2,0,2,0,1,1,2,2,2)",
            "0;(0,1,0,1,0,2,2,1,1);(2,2,2,2,1,1,0,2,0)",
            "0;(0,1,0,2,0,2,2,2,1);(2,2,2,1,1,1,0,1,0)",
            "0;(1,0,1,2,1,1,2,1,0);(2,0,0,2,1,2,2,1,2)",
            "1;(0,0,2,2,2,1,1,0,0);(2,0,0,2,2,1,1,1,0)",
            "1;(0,0,1,2,0,0,1,1,1);(1,2,2,2,0,0,1,2,0)",
            "1;(0,0,1,2,0,0,2,2,1);(1,2,2,1,0,0,2,1,0)",
            "1;(0,1,1,2,2,2,0,1,1);(1,0,1,1,2,2,2,1,1)",
            "1;(0,1,2,1,1,2,1,1,1);(1,1,2,2,2,1,2,2,1)",
            "1;(0,2,2,1,1,0,1,1,1);(1,1,0,1,0,1,0,2,2)",
            "1;(1,0,1,2,1,1,2,1,1);(1,2,2,2,1,2,2,1,2)",
            "1;(1,0,1,2,1,2,2,1,1);(1,1,2,2,1,1,2,1,2)",
            "1;(1,0,2,0,2,0,0,2,2);(2,2,0,2,2,0,2,2,2)",
            "1;(1,1,2,1,1,2,1,0,1);(2,2,2,0,2,1,2,2,1)",
            "1;(1,1,0,1,2,1,1,2,1);(2,2,2,1,2,2,1,2,0)",
            "1;(1,1,2,0,0,2,0,0,2);(2,2,0,0,2,2,0,1,0)",
            "1;(1,1,2,2,2,0,2,1,2);(2,1,1,2,1,0,1,1,1)",
            "1;(1,2,0,1,2,0,2,0,0);(2,2,0,1,1,0,1,0,0)",
            "1;(1,2,1,1,2,1,0,1,0);(1,2,2,2,0,2,1,2,2)",
        ),
        22: (
            "1;(0,1,2,1,1,2,1,1,1,2);(1,1,2,2,2,1,2,2,1,2)",
        ),
    },
    4: {
        8: (
            "0;(1,1,1);(1,w,1)",
            "0;(1,1,1);(1,v,1)",
            "0;(1,1,1);(1,1,w)",
            "0;(1,1,1);(v,v,w)",
            "0;(1,w,1);(w,1,w)",
            "1;(1,1,0);(v,0,w)",
            "1;(w,1,0);(v,0,1)",
        ),
        10: (
            "0;(1,w,1,1);(1,w,v,w)",
            "1;(w,1,1,0);(v,1,0,v)",
        ),
    },
}


def _pad(prefix: str, m: int) -> str:
    parts = prefix.split(",")
    if len(parts) > m:
        raise ValueError(f"row prefix {prefix!r} longer than m={m}")
    return "(" + ",".join(parts + ["0"] * (m - len(parts))) + ")"


def _rows(q: int, d: int, kind: str, prefix: str, *lengths: int):
    for n in lengths:
        yield (q, n, d, f"{kind}:{_pad(prefix, n // 2)}")


_W: list[tuple[int, int, int, str]] = []

# Binary circulant rows attaining each minimum weight.
_W += _rows(2, 5, "C", "1,1,1,0,1", 18, 20, 22, 24, 26, 28)
_W += _rows(2, 6, "C", "1,1,1,1,0,1", 30, 32, 36, 38)
_W += _rows(2, 7, "C", "1,0,1,1,1,1,0,0,1", 28)
_W += _rows(2, 7, "C", "1,1,1,0,1,1,0,1", 30, 32, 34, 36, 38, 40, 42, 44, 46)
_W += _rows(2, 8, "C", "1,1,1,1,0,1,1,0,1", 42, 46, 48, 50, 52, 54)
_W += _rows(2, 9, "C", "1,1,0,1,0,1,1,1,1,0,0,1", 42)
_W += _rows(2, 9, "C", "1,1,1,0,1,1,1,0,0,1,0,1",
            44, 46, 48, 50, 52, 54, 56, 58, 60, 62, 64)
_W += _rows(2, 10, "C", "1,1,0,1,0,1,1,1,1,1,0,0,1",
            56, 60, 62, 64, 66, 68, 70, 72)
# Binary [24,12] Toeplitz triple of weight 7.
_W.append((2, 24, 7, "0;(1,1,1,1,0,1,1,0,0,0,0);(1,0,0,0,1,1,0,1,1,1,1)"))

# Ternary rows.
_W += _rows(3, 5, "C", "1,2,1,1", 14, 16, 18)
_W += _rows(3, 6, "N", "1,2,1,1,1,0", 12)
_W += _rows(3, 6, "C", "1,2,2,1,1", 20, 22, 24)
_W += _rows(3, 7, "C", "1,2,1,1,2,0,1", 22, 24, 26, 28, 30)
_W += _rows(3, 8, "C", "1,1,1,2,1,1,0,1", 28, 30, 32, 34, 36)
_W += _rows(3, 9, "C", "1,1,1,1,2,1,1,1,2,0,0,1", 28)
_W += _rows(3, 9, "C", "1,2,1,1,1,2,0,1,1", 34, 36, 38, 40, 42)
_W += _rows(3, 10, "C", "1,1,1,1,0,1,2,1,0,1,1", 34)
_W += _rows(3, 10, "C", "1,2,2,1,2,1,0,1,1,0,1", 38, 40)
_W += _rows(3, 10, "C", "1,1,2,2,1,1,0,1,1,0,1", 42, 44, 46, 48)
# The nine negacirculant [28,14,9] rows.
_W += _rows(3, 9, "N", "1,2,0,2,1,1,2,0,2,1", 28)
_W += _rows(3, 9, "N", "1,2,2,2,0,2,0,2,2,1", 28)
_W += _rows(3, 9, "N", "1,1,1,1,2,1,2,0,0,0,1", 28)
_W += _rows(3, 9, "N", "1,1,2,1,2,0,0,1,2,0,1", 28)
_W += _rows(3, 9, "N", "1,2,2,2,2,0,1,1,0,0,2", 28)
_W += _rows(3, 9, "N", "1,1,2,1,2,1,1,1,1,1,2", 28)
_W += _rows(3, 9, "N", "1,1,2,1,2,2,2,1,2,1,0,1", 28)
_W += _rows(3, 9, "N", "1,2,2,1,1,1,1,1,2,2,0,1", 28)
_W += _rows(3, 9, "N", "1,2,2,2,2,2,0,1,1,2,1,1", 28)

# Quaternary rows.
_W += _rows(4, 5, "C", "1,w,1,w,0", 10)
_W += _rows(4, 5, "C", "1,w,1,1", 12, 14)
_W += _rows(4, 6, "C", "1,w,1,1,1", 14, 16, 18, 20)
_W += _rows(4, 7, "C", "1,v,1,w,1,0,1", 18, 20, 22, 24)
_W += _rows(4, 8, "C", "1,v,1,1,w,w,v,w", 20)
_W += _rows(4, 8, "C", "1,w,w,v,w,1,1", 22)
_W += _rows(4, 8, "C", "1,1,w,1,w,1,1", 24, 26, 28, 30)
_W += _rows(4, 9, "C", "1,w,w,v,w,v,w,1,0,w", 24)
_W += _rows(4, 9, "C", "1,v,w,w,w,w,1,0,1", 26)
_W += _rows(4, 9, "C", "1,w,v,w,1,1,1,0,1", 28, 30, 32, 34, 36)
_W += _rows(4, 10, "C", "1,1,w,w,v,v,1,v,1,w,0,w", 28)
_W += _rows(4, 10, "C", "1,v,w,v,1,1,w,1,0,1", 30)
_W += _rows(4, 10, "C", "1,v,1,w,w,w,1,1,0,1", 32, 34, 36, 38, 40)

MIN_WEIGHT_WITNESSES: tuple[tuple[int, int, int, str], ...] = tuple(_W)
del _W


def build_code(q: int, spec: str) -> LinearCode:
    """Construct the code named by a witness or class-table literal."""
    gf = GF(q)
    if spec.startswith("C:"):
        return double_circulant_code(parse_circulant(gf, spec))
    if spec.startswith("N:"):
        return double_negacirculant_code(parse_circulant(gf, spec))
    return double_toeplitz_code(parse_triple(gf, spec))


def iter_weight_checks() -> Iterator[tuple[int, int, int, str]]:
    """All (q, n, min_weight, spec) records with a known exact weight.

    Combines the explicit witnesses with the class tables, whose rows
    attain the optimal minimum weight of their length by definition.
    """
    seen: set[tuple[int, str]] = set()
    for q, n, d, spec in MIN_WEIGHT_WITNESSES:
        if (q, spec) not in seen:
            seen.add((q, spec))
            yield q, n, d, spec
    for kind, table in (("C", DC_CLASS_ROWS), ("N", NC_CLASS_ROWS)):
        for q, per_n in table.items():
            for n, rows in per_n.items():
                d = OPTIMAL_MIN_WEIGHT[q][n]
                for row in rows:
                    spec = f"{kind}:{row}"
                    if (q, spec) not in seen:
                        seen.add((q, spec))
                        yield q, n, d, spec
    for q, per_n in DT_CLASS_TRIPLES.items():
        for n, triples in per_n.items():
            d = OPTIMAL_MIN_WEIGHT[q][n]
            for spec in triples:
                if (q, spec) not in seen:
                    seen.add((q, spec))
                    yield q, n, d, spec
