"""The ordered-partition expansion of the determinant and its coefficients.

For an ordered partition ``B = (b_1, ..., b_r)`` of ``{1..n}`` with prefix
unions ``b'_k = b_1 | ... | b_k``, the term of ``B`` is

    prod_k prod_{j in b_k} sum_{i in b'_k} a[i][j]

and ``det(A) = sum_B (-1)^(n - r) * term(A, B)``.  Column ``j`` sums the rows
of every block up to and including its own.

Expanding every product turns the right-hand side into ``sum_f c_f a_f`` over
all functions ``f`` on ``{1..n}``.  Two routes to ``c_f`` live here and are
kept independent on purpose:

* :func:`coefficient_table` distributes every product symbolically and
  accumulates signs per chosen function;
* :func:`coefficient_direct` sums signs over the partitions ``B`` whose
  product contains ``a_f`` at all, which happens exactly when ``f(j)`` is in
  a block no later than ``j``'s for every ``j``.
"""

from dataclasses import dataclass, field
from itertools import product

from .endofunctions import (
    EndoFunction,
    all_functions,
    as_function,
    flatten,
    require_acyclic,
    rules,
)
from .limits import DimensionError, check_size
from .matrix import as_matrix
from .partitions import (
    enumerate_ordered_partitions,
    lower_set_cube,
    mask_elements,
    prefix_masks,
    singleton_partitions,
)


def _sign(n, r):
    return -1 if (n - r) % 2 else 1


def factor_pattern(B):
    """For each column ``j`` (1-based, in order) the rows summed in its factor.

    This is the symbolic shape of ``B``'s term: the product over ``j`` of
    ``sum(a_ij for i in pattern[j-1])``.
    """
    rows = [None] * B.n
    for m, pre in zip(B.masks, prefix_masks(B)):
        summed = frozenset(mask_elements(pre))
        for j in mask_elements(m):
            rows[j - 1] = summed
    return tuple(rows)


def term_for_partition(A, B):
    A = as_matrix(A)
    if A.n != B.n:
        raise DimensionError(f"matrix is {A.n}x{A.n} but partition is of 1..{B.n}")
    a = A.entries
    by_block = [[] for _ in B.masks]
    for e, k in enumerate(B.word):
        by_block[k - 1].append(e)
    prod = 1
    rows = []
    for cols in by_block:
        rows.extend(cols)
        for j in cols:
            prod *= sum(a[i][j] for i in rows)
            if not prod:
                return 0
    return prod


def det_terrible(A, cap=None):
    """Determinant as the signed sum of :func:`term_for_partition` over all
    ordered partitions.  Streams the partitions; nothing is stored."""
    A = as_matrix(A)
    n = A.n
    check_size("partitions", n, cap)
    total = 0
    for B in enumerate_ordered_partitions(n, cap=cap):
        t = term_for_partition(A, B)
        total += -t if (n - B.r) % 2 else t
    return total


def in_S_f(B, f):
    """True iff ``a_f`` occurs in the expanded product of ``B``, i.e. every
    ``f(j)`` lies in a block no later than the block of ``j``."""
    f = as_function(f)
    if B.n != f.n:
        raise DimensionError(f"partition of 1..{B.n} vs function on 1..{f.n}")
    where = B.word
    return all(where[f.table[j] - 1] <= where[j] for j in range(f.n))


def S_f(f, cap=None):
    """``{B : in_S_f(B, f)}`` by direct filtering of all ordered partitions."""
    f = as_function(f)
    return {B for B in enumerate_ordered_partitions(f.n, cap=cap) if in_S_f(B, f)}


def coefficient_direct(f, cap=None):
    """``c_f`` as the signed count of ordered partitions containing ``a_f``."""
    f = as_function(f)
    n = f.n
    check_size("coefficient", n, cap)
    total = 0
    for B in enumerate_ordered_partitions(n, cap=cap):
        if in_S_f(B, f):
            total += _sign(n, B.r)
    return total


def coefficient_via_flattening(f, cap=None):
    """``c_f = (-1)^(n - |D_f|) * c_fbar`` with ``fbar`` the flattened function."""
    f = as_function(f)
    check_size("coefficient", f.n, cap)
    fbar = flatten(f).function
    return _sign(f.n, fbar.n) * coefficient_direct(fbar, cap=cap)


@dataclass
class CoefficientTable:
    """``c_f`` for every function on ``{1..n}``, zeros included.

    Index with an :class:`EndoFunction` or a plain table tuple.
    """

    n: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, f):
        key = f.table if isinstance(f, EndoFunction) else tuple(f)
        return self.entries[key]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries))

    def items(self):
        return sorted(self.entries.items())

    def nonzero(self):
        return {k: v for k, v in sorted(self.entries.items()) if v}


def coefficient_table(n, cap=None):
    """Expand every partition's product of sums into monomials.

    For each ``B`` and each way of choosing a row ``i`` from column ``j``'s
    factor (for every ``j``), the choice is the function ``j -> i``; its
    coefficient collects ``(-1)^(n - |B|)``.
    """
    check_size("coefficient_table", n, cap)
    entries = {f.table: 0 for f in all_functions(n)}
    for B in enumerate_ordered_partitions(n):
        s = _sign(n, B.r)
        choices = [sorted(rows) for rows in factor_pattern(B)]
        for table in product(*choices):
            entries[table] += s
    return CoefficientTable(n, entries)


def S_f_via_cubes(f, cap=None):
    """Rebuild ``S_f`` for an acyclic ``f`` from singleton partitions alone.

    A singleton partition obeys the rules of ``f`` when every rule ``p <= q``
    has ``p`` no later than ``q`` in its word; ``S_f`` is the union of the
    cubes below those singletons.
    """
    f = as_function(f)
    require_acyclic(f, "S_f_via_cubes")
    check_size("partitions", f.n, cap)
    rs = rules(f)
    out = set()
    for A in singleton_partitions(f.n):
        if rs.satisfied_by(A):
            out |= lower_set_cube(A)
    return out
