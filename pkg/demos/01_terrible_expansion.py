"""
Determinants from ordered partitions
====================================

Evaluate a determinant by summing one signed product per ordered partition
of the column set, then compare with elimination.
"""

import random

from opdet import ExactMatrix, OrderedPartition, det_bareiss, det_terrible, enumerate_ordered_partitions
from opdet.expansion import factor_pattern, term_for_partition

# %%
# A 2x2 matrix has three ordered partitions of {1, 2}.  Each contributes a
# product of column sums; the rows summed in column j are the elements of
# every block up to and including the block that holds j.
A = ExactMatrix([[2, 3], [5, 7]])
for B in enumerate_ordered_partitions(2):
    sign = (-1) ** (2 - B.r)
    print(f"{str(B):>5}  sign {sign:+d}  rows per column {[sorted(r) for r in factor_pattern(B)]}"
          f"  term {term_for_partition(A, B)}")
print("sum:", det_terrible(A), " elimination:", det_bareiss(A))

# %%
# A single term for a 5x5 matrix.  Column 2 sees only row 2; columns 1 and 3
# see rows 1..3; columns 4 and 5 see every row.
B = OrderedPartition.parse("2/13/45")
print(B, [sorted(r) for r in factor_pattern(B)])

# %%
# Random integer matrices up to 6x6 agree exactly with fraction-free
# elimination.
rng = random.Random(1729)
for n in range(1, 7):
    M = ExactMatrix.random(n, rng)
    print(n, det_terrible(M), det_bareiss(M))
