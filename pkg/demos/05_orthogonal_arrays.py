"""Orthogonal arrays as a second source of base codes.

A strength-2, index-1 array over s symbols has the property that any two
rows show every symbol pair exactly once.  Its columns therefore pairwise
agree in at most one row, which is precisely the 2-determined structure
the lift construction wants, and it exists for every prime power s.
"""

import numpy as np

from frameproof import (
    build_oa_strength2,
    is_t_determined,
    make_oa,
    normalize_column_to_infinity,
    oa_to_frameproof,
    oa_to_pt_code,
    verify_oa,
)

oa = build_oa_strength2(3)
print(oa)
print(np.array2string(oa.array), "\n")

print("exhaustive balance check:", verify_oa(oa).verdict)

# Per-row symbol swaps keep the balance; use them to zero out a column.
norm = normalize_column_to_infinity(oa, 4)
print("\ncolumn 4 normalised to the star symbol:")
print(np.array2string(norm.array))
print("still balanced:", verify_oa(norm).verdict)

# Corruption in a single cell never survives verification.
bad = oa.array.copy()
bad[1, 3] = (bad[1, 3] + 1) % 3
report = verify_oa(make_oa(bad, 3, 2))
print("\nverdict on a corrupted copy:", report.verdict)
w = report.witness
print(f"  rows {w.rows}: tuple {w.symbols} appears {w.count}x, expected {w.expected}")

# Columns as codewords: 9 words, 3-frameproof since k=4 > 3*(t-1).
code = oa_to_frameproof(oa, 3)
print("\ncolumns as a code:", code)

# Drop the all-star column to get a 2-determined seed for lifting.
seed = oa_to_pt_code(oa)
print("star-structured seed:", seed, "| 2-determined:", is_t_determined(seed, 2).verdict)
for word in seed.words:
    print("  ", word)
