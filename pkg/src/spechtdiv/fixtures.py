"""Embedded corpus of externally known values.

Used by the test suite and the ``verify`` harness to pin computations to
published reference data.  Entries flagged as reference-only describe shapes
too large to recompute here; they are printed for manual comparison and never
asserted.
"""

from __future__ import annotations

# Divisor chain of the shape (2,2).
EXT7_CHAIN = (2, 6)

# Divisor chain of the shape (3,2,1); also the first table row set below.
EXH2_5_CHAIN = (1,) * 4 + (3,) * 4 + (15,) * 4 + (45,) * 4

# (alpha, gamma): product of strictly-upper-diagonal hooks vs. first divisor,
# for small self-conjugate shapes.
EXH2_5_ALPHA_GAMMA = {
    (3, 2, 1): (3, 1),
    (4, 1, 1, 1): (6, 6),
    (4, 2, 1, 1): (8, 2),
    (3, 3, 2): (8, 8),
    (3, 3, 3): (24, 24),
    (5, 1, 1, 1, 1): (24, 24),
}

# Pairing table of the trigonalizing tuples for the hook shape (2,1,1),
# i.e. n = 4, l = 2: x against y, unscaled diagonal (2, 8, 8).
EXHOOK4_MATRIX = ((2, -2, 2), (0, 8, 0), (0, 0, 8))

# Layered decomposition of the hook (6,1^8) at p = 2 (n = 14, l = 8):
# multiplicities of two-row labels with their layer subscripts.
EXHOOK6_DECOMP = (
    (3, (14,), 7),
    (2, (13, 1), 8),
    (2, (12, 2), 7),
    (1, (11, 3), 8),
    (1, (10, 4), 7),
    (1, (9, 5), 8),
)

# Group decomposition of the shape (2,2,1,1), n = 6.
EX22_3_GROUP = ((4, 1), (20, 3), (40, 1), (80, 4))
EX22_3_CHAIN = (4, 20, 20, 20, 40, 80, 80, 80, 80)

# The full published pairing table for n = 6, under the rescaled form.
# Columns are single brackets; rows are described as integer combinations
# (coefficient, (a, b)) of brackets, or ("rho", (a, b)) for the
# row-symmetrized vectors.
EX22_3_COLUMNS = (
    (5, 6), (4, 6), (3, 6), (2, 6), (4, 5), (3, 5), (2, 5), (3, 4), (2, 4),
)
EX22_3_ROW_SPECS = (
    ((1, (3, 6)),),
    ((1, (3, 4)),),
    ((1, (4, 5)), (1, (1, 5))),
    ((1, (3, 5)), (-1, (1, 5))),
    ((1, (2, 5)), (1, (1, 5))),
    ((1, (3, 6)), (1, (5, 6)), (-3, (3, 5))),
    (("rho", (4, 5)),),
    (("rho", (3, 5)),),
    (("rho", (2, 5)),),
    (("rho", (3, 4)),),
    (("rho", (2, 4)),),
)
EX22_3_TABLE = (
    (-3, 3, 12, 3, 2, 3, 2, -3, -2),
    (2, 3, -3, -2, -3, 3, 2, 12, 3),
    (0, 5, 0, 0, 15, 0, 0, -5, 5),
    (0, 0, 5, 0, 0, 15, 0, 5, 0),
    (0, 0, 0, 5, 0, 0, 15, 0, 5),
    (0, 0, 0, 0, -10, -30, -10, -10, -10),
    (0, 0, 0, 0, 20, 0, 0, 0, 20),
    (0, 0, 0, 0, 0, 20, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 20, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 20, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 20),
)

# Row-symmetrization expansion at n = 6: <3,4> rho+ as a bracket combination.
# Brackets are alternating in their entries, so (3,2) means minus (2,3).
EX22_3_RHO_EXPANSION = (
    (3, 4),
    ((1, (3, 4)), (-1, (1, 4)), (1, (3, 2)), (1, (1, 2))),
)

# Known divisor data for symmetric non-hook shapes: middle jump m, principal
# hook product H, and the published (modulus, multiplicity) pattern.  When
# half_only is set, the pattern covers the first half of the chain plus the
# (r/2 + 1)st divisor; the rest follows by the duality mirror.
CONJSYM4_ROWS = (
    {"shape": (2, 2), "m": 3, "H": 3,
     "divisors": ((2, 1), (6, 1)), "half_only": False},
    {"shape": (3, 2, 1), "m": 5, "H": 5,
     "divisors": ((1, 4), (3, 4), (15, 4), (45, 4)), "half_only": False},
    {"shape": (3, 3, 2), "m": 15, "H": 15,
     "divisors": ((8, 21), (120, 21)), "half_only": False},
    {"shape": (3, 3, 3), "m": 15, "H": 15,
     "divisors": ((24, 21), (360, 21)), "half_only": False},
    {"shape": (4, 2, 1, 1), "m": 7, "H": 7,
     "divisors": ((2, 14), (8, 31), (56, 31)), "half_only": True},
)

# Reference-only: shapes beyond brute-force reach here.
REFERENCE_ONLY = {
    # Layered decomposition at p = 2 of the shape (4,3,2,2,1), n = 12:
    # (multiplicity, label, layer).
    "layer_display_43221": (
        (1, (8, 3, 1), 2), (1, (6, 5, 1), 3), (1, (10, 2), 4),
        (1, (10, 2), 7), (3, (12,), 4), (2, (12,), 7),
        (1, (6, 4, 2), 5), (1, (6, 4, 2), 8), (1, (7, 3, 2), 5),
        (1, (8, 4), 5), (1, (7, 5), 6), (1, (7, 5), 7),
        (1, (11, 1), 6), (4, (11, 1), 9), (2, (9, 3), 7),
        (1, (9, 3), 9), (1, (5, 4, 2, 1), 10),
    ),
    # Smallest asymmetric shape with a divisor jump exceeding the outer hook
    # length (which is 12): shape (9,2,2,1).
    "large_jump_9221": {
        "shape": (9, 2, 2, 1),
        "divisors": ((4, 792), (8, 3421), (120, 493), (960, 714), (2880, 586)),
        "outer_hook": 12,
    },
    # Deep symmetric rows of the published divisor table (first halves).
    "symmetric_large": (
        {"shape": (4, 3, 2, 1), "m": 21, "H": 21,
         "divisors": ((1, 41), (3, 176), (15, 167), (315, 167))},
        {"shape": (5, 2, 1, 1, 1), "m": 9, "H": 9,
         "divisors": ((6, 56), (30, 168), (270, 168))},
        {"shape": (4, 3, 3, 1), "m": 21, "H": 21,
         "divisors": ((8, 372), (40, 222), (840, 222))},
        {"shape": (4, 4, 2, 2), "m": 35, "H": 35,
         "divisors": ((8, 131), (24, 353), (72, 836), (2520, 836))},
        {"shape": (4, 4, 3, 2), "m": 35, "H": 35,
         "divisors": ((16, 428), (48, 2081), (144, 1781), (5040, 1781))},
        {"shape": (5, 3, 2, 1, 1), "m": 3, "H": 27,
         "divisors": ((2, 1046), (4, 460), (8, 44), (16, 386), (48, 1560),
                      (144, 354), (432, 354))},
        {"shape": (5, 3, 3, 1, 1), "m": 3, "H": 27,
         "divisors": ((4, 2329), (20, 181), (40, 857), (120, 2559),
                      (360, 2082), (1080, 2082))},
        {"shape": (6, 2, 1, 1, 1, 1), "m": 11, "H": 11,
         "divisors": ((24, 208), (48, 2), (144, 840), (1584, 840))},
        {"shape": (7, 2, 1, 1, 1, 1, 1), "m": 13, "H": 13,
         "divisors": ((120, 792), (840, 3960), (10920, 3960))},
    ),
}
