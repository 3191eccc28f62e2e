"""Faces of the permutahedron, identified with ordered partitions.

A face is represented combinatorially by its ordered partition ``B``; its
dimension is ``n - |B|``, so vertices are singleton partitions and the whole
polytope is the one-block partition.  The only geometry used is vertex
coordinates: the singleton partition ``w_1/.../w_n`` sits at the point whose
``i``-th coordinate is the position of ``i`` in the word.
"""

from dataclasses import dataclass

from .endofunctions import as_function, require_acyclic
from .expansion import in_S_f
from .limits import check_size
from .partitions import enumerate_ordered_partitions


@dataclass(frozen=True)
class FaceSet:
    n: int
    faces: frozenset

    def __post_init__(self):
        for B in self.faces:
            if B.n != self.n:
                raise ValueError(f"face {B} is not a partition of 1..{self.n}")

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(sorted(self.faces))

    def __contains__(self, B):
        return B in self.faces


def all_faces(n, cap=None):
    return FaceSet(n, frozenset(enumerate_ordered_partitions(n, cap=cap)))


def vertex_coordinates(A):
    """Point of the singleton partition ``A``: ``x_i`` is the position of ``i``."""
    if not A.is_singleton():
        raise ValueError(f"{A} is not a singleton partition")
    return tuple(A.word)


def satisfies_halfspace(A, i, j):
    """True iff the vertex of ``A`` lies in the half-space ``x_i <= x_j``."""
    x = vertex_coordinates(A)
    for e in (i, j):
        if not 1 <= e <= A.n:
            raise ValueError(f"element {e} outside 1..{A.n}")
    return x[i - 1] <= x[j - 1]


def euler_characteristic(faces):
    """Alternating face count ``sum (-1)^dim``, with ``dim B = n - |B|``.

    Accepts a :class:`FaceSet` or any iterable of ordered partitions.
    """
    total = 0
    for B in faces:
        total += -1 if (B.n - B.r) % 2 else 1
    return total


def gamma_f(f, cap=None):
    """Faces whose ordered partitions contain the monomial of the acyclic ``f``.

    Membership is decided by :func:`opdet.expansion.in_S_f`, so this face set
    and the coefficient computation can never disagree about ``S_f``.
    """
    f = as_function(f)
    require_acyclic(f, "gamma_f")
    check_size("partitions", f.n, cap)
    faces = frozenset(B for B in enumerate_ordered_partitions(f.n, cap=cap) if in_S_f(B, f))
    return FaceSet(f.n, faces)
