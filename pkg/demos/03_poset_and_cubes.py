"""
Cubes below a permutation
=========================

Merging adjacent blocks walks down the poset of ordered partitions.  Below a
permutation word with n letters sits a Boolean cube of 2^(n-1) partitions.
"""

from opdet import EndoFunction, OrderedPartition, S_f, S_f_via_cubes, fubini, lower_set_cube
from opdet.export import poset_edges
from opdet.partitions import covers_below

A = OrderedPartition.parse("3/1/2/4")
print("covers below", A, ":", [str(C) for C in covers_below(A)])

cube = sorted(lower_set_cube(OrderedPartition.parse("1/2/3/4")))
print(len(cube), "partitions in the cube:", [str(B) for B in cube])

# %%
# The covering graph for n = 3 has 13 nodes and 18 edges.
edges = poset_edges(3)
print(fubini(3), "nodes,", len(edges), "edges")

# %%
# For an acyclic function the set of contributing partitions is a union of
# such cubes, one per permutation that respects the function's rules.
f = EndoFunction([1, 1, 1])
print(sorted(str(B) for B in S_f_via_cubes(f)), S_f_via_cubes(f) == S_f(f))
