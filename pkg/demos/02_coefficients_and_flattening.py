"""
Which monomials survive
=======================

Expanding every product of sums gives one monomial ``a_f`` per function
``f`` on ``{1..n}``.  Their net coefficients vanish unless ``f`` is a
permutation.
"""

from opdet import (
    EndoFunction,
    coefficient_direct,
    coefficient_table,
    coefficient_via_flattening,
    cycles,
    flatten,
    forest,
    rules,
)

# %%
# The full table for n = 3: 27 functions, six nonzero entries.
table = coefficient_table(3)
print(len(table), "functions;", table.nonzero())

# %%
# Collapsing each cycle to one fixed point gives an acyclic function on a
# smaller domain.  The coefficient changes only by a sign.
f = EndoFunction([1, 3, 2, 3, 6, 5])
fl = flatten(f)
print("cycles", cycles(f).cycles, "-> flattened", fl.function, "relabel", fl.relabel)
for g in (EndoFunction([2, 1]), EndoFunction([2, 3, 1, 1]), f):
    print(g, coefficient_direct(g), coefficient_via_flattening(g))

# %%
# An acyclic function is a rooted forest; every ancestor must sit no later
# than its descendants in any contributing ordered partition.
h = EndoFunction([2, 2, 6, 4, 2, 4, 4])
fo = forest(h)
print("roots", fo.roots, "rules", rules(h))
