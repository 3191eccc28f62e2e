"""
Euler characteristics on the permutahedron
==========================================

Ordered partitions label the faces of the permutahedron; a face with ``r``
blocks has dimension ``n - r``.  Alternating face counts recover the
coefficients computed algebraically.
"""

from opdet import (
    EndoFunction,
    OrderedPartition,
    all_faces,
    coefficient_direct,
    euler_characteristic,
    gamma_f,
    vertex_coordinates,
)

for word in ("1/2/3", "3/1/2", "2/3/1"):
    print(word, vertex_coordinates(OrderedPartition.parse(word)))

# %%
# The whole face lattice has Euler characteristic 1 for every n.
print([euler_characteristic(all_faces(n)) for n in range(1, 8)])

# %%
# For a non-bijective acyclic function the selected faces have
# characteristic 0, matching its vanishing coefficient.
for table in ([1, 1, 1], [1, 1, 3, 3], [1, 2, 3]):
    f = EndoFunction(table)
    g = gamma_f(f)
    print(f, len(g), "faces, chi =", euler_characteristic(g), " c_f =", coefficient_direct(f))
