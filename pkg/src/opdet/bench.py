"""Wall-clock timings of every determinant and permanent routine.

``terms`` is the size of the sum each method walks: ordered partitions for the
expansion, permutations for Leibniz and the brute-force permanent, column
subsets for Ryser, distinct minors times their row length for the memoised
cofactor expansion, and entry updates for Bareiss.
"""

import csv
import io
import random
import time
from math import factorial

from .expansion import det_terrible
from .limits import DEFAULT_SEED
from .matrix import (
    ExactMatrix,
    det_bareiss,
    det_cofactor,
    det_leibniz,
    perm_brute,
    perm_ryser,
)
from .partitions import fubini

METHODS = {
    "terrible": (det_terrible, fubini),
    "leibniz": (det_leibniz, factorial),
    "cofactor": (det_cofactor, lambda n: n * 2 ** (n - 1)),
    "bareiss": (det_bareiss, lambda n: sum((n - 1 - k) ** 2 for k in range(n - 1))),
    "ryser": (perm_ryser, lambda n: 2**n),
    "brute": (perm_brute, factorial),
}


def term_count(method, n):
    return METHODS[method][1](n)


def run(ns, methods=None, seed=DEFAULT_SEED, repeats=3):
    """Time each method on the same seeded random matrix per ``n``.

    Returns rows ``(method, n, terms, seconds, value)``; ``seconds`` is the
    best of ``repeats`` runs.
    """
    methods = list(methods or METHODS)
    rng = random.Random(seed)
    rows = []
    for n in ns:
        A = ExactMatrix.random(n, rng)
        for name in methods:
            fn = METHODS[name][0]
            best = None
            for _ in range(repeats):
                t0 = time.perf_counter()
                value = fn(A)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            rows.append((name, n, term_count(name, n), best, value))
    return rows


def to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "n", "terms", "seconds", "value"])
    for name, n, terms, seconds, value in rows:
        w.writerow([name, n, terms, f"{seconds:.6f}", value])
    return buf.getvalue()
