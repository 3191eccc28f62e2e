"""
Cross-checks and cost
=====================

Every determinant routine agrees; they differ enormously in the number of
terms they visit.  Permanents are computed two ways as well.
"""

from opdet import ExactMatrix, perm_brute, perm_ryser
from opdet.bench import run, to_csv
from opdet.verify import run_suite

print(to_csv(run(range(1, 7), repeats=1)))

# %%
J = ExactMatrix.ones(5)
print("permanent of the 5x5 all-ones matrix:", perm_ryser(J), perm_brute(J))

# %%
# A quick pass over a few verification suites with reduced sizes.
for name in ("oracle", "dichotomy", "cubes", "euler"):
    print(run_suite(name, n_max=3, trials=20).line())
