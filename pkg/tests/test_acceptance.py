"""Acceptance criteria, each checked at its stated size and tolerance.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from itertools import permutations
from math import factorial, prod

import pytest

from opdet.endofunctions import (
    EndoFunction,
    all_functions,
    is_acyclic,
    is_bijective,
    random_acyclic_function,
    random_function,
    rules,
)
from opdet.expansion import (
    S_f,
    S_f_via_cubes,
    coefficient_direct,
    coefficient_table,
    coefficient_via_flattening,
    det_terrible,
    factor_pattern,
    term_for_partition,
)
from opdet.limits import DEFAULT_SEED
from opdet.matrix import ExactMatrix, det_bareiss, det_leibniz, perm_brute, perm_ryser
from opdet.partitions import (
    enumerate_ordered_partitions,
    fubini,
    precequals,
    singleton_partitions,
    stirling2,
    stirling_alternating_identity,
)
from opdet.permutahedron import all_faces, euler_characteristic, gamma_f, satisfies_halfspace

RESULTS = []


def _stirling_oracle(n, k):
    # inclusion-exclusion closed form, independent of the library's recurrence
    return sum((-1) ** i * (k - i) ** n * factorial(k) // (factorial(i) * factorial(k - i)) for i in range(k + 1)) // factorial(k)


def _inversion_sign(p):
    n = len(p)
    return -1 if sum(p[a] > p[b] for a in range(n) for b in range(a + 1, n)) % 2 else 1


def criterion_1():
    rng = random.Random(DEFAULT_SEED)
    count = 0
    t0 = time.perf_counter()
    for n in range(1, 7):
        for _ in range(100):
            A = ExactMatrix.random(n, rng, -9, 9)
            assert det_terrible(A) == det_bareiss(A) == det_leibniz(A), A
            count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 60, f"{elapsed:.1f}s"
    return f"{count} matrices, exact equality, {elapsed:.1f}s"


def criterion_2():
    want = {(1, 1): 0, (1, 2): 1, (2, 2): 0, (2, 1): -1}
    assert dict(coefficient_table(2).entries) == want
    return "c_f table for n=2 exact"


def criterion_3():
    parts = list(enumerate_ordered_partitions(3))
    assert len(parts) == 13
    by_r = {}
    for B in parts:
        by_r.setdefault(B.r, []).append((-1) ** (3 - B.r))
    assert {r: (len(s), set(s)) for r, s in by_r.items()} == {3: (6, {1}), 2: (6, {-1}), 1: (1, {1})}
    displayed = {
        (+1, "1", "12", "123"), (+1, "1", "123", "13"), (+1, "12", "2", "123"),
        (+1, "123", "2", "23"), (+1, "13", "123", "3"), (+1, "123", "23", "3"),
        (-1, "1", "123", "123"), (-1, "123", "2", "123"), (-1, "123", "123", "3"),
        (-1, "12", "12", "123"), (-1, "13", "123", "13"), (-1, "123", "23", "23"),
        (+1, "123", "123", "123"),
    }
    ours = {
        ((-1) ** (3 - B.r), *("".join(map(str, sorted(rows))) for rows in factor_pattern(B)))
        for B in parts
    }
    assert ours == displayed
    # numeric terms equal the product of the displayed column sums
    A = ExactMatrix([[2, -3, 5], [7, 11, -13], [17, -19, 23]])
    for B in parts:
        assert term_for_partition(A, B) == prod(
            sum(A[i - 1][j] for i in rows) for j, rows in enumerate(factor_pattern(B))
        )
    return "13 terms, signs +6/-6/+1, all factor patterns match"


def criterion_4():
    def want(f):
        if not is_bijective(f):
            return 0
        return _inversion_sign(f.table)

    count = 0
    for n in range(1, 5):
        for f in all_functions(n):
            assert coefficient_direct(f) == want(f), f
            count += 1
    assert count == 1 + 4 + 27 + 256
    rng = random.Random(DEFAULT_SEED)
    for _ in range(500):
        f = random_function(5, rng)
        assert coefficient_direct(f) == want(f), f
    return f"{count} exhaustive + 500 sampled at n=5"


def criterion_5():
    count = 0
    for n in range(1, 5):
        table = coefficient_table(n)
        for f in all_functions(n):
            assert coefficient_direct(f) == table[f] == coefficient_via_flattening(f), f
            count += 1
    return f"{count} functions, three routes agree"


def criterion_6():
    for n in range(13):
        assert stirling_alternating_identity(n) == 1
        assert sum((-1) ** (n - k) * factorial(k) * _stirling_oracle(n, k) for k in range(n + 1)) == 1
    return "n=0..12"


def criterion_7():
    known = (1, 1, 3, 13, 75, 541, 4683, 47293)
    for n in range(1, 8):
        oracle = sum(factorial(k) * _stirling_oracle(n, k) for k in range(n + 1))
        assert oracle == known[n]
        parts = list(enumerate_ordered_partitions(n))
        assert len(parts) == len(set(parts)) == fubini(n) == oracle
        for k in range(1, n + 1):
            assert sum(B.r == k for B in parts) == factorial(k) * stirling2(n, k) == factorial(k) * _stirling_oracle(n, k)
    return "n=1..7 counts and per-k counts"


def criterion_8():
    count = 0
    for n in range(1, 5):
        for f in all_functions(n):
            if is_acyclic(f):
                assert S_f_via_cubes(f) == S_f(f), f
                count += 1
    rng = random.Random(DEFAULT_SEED)
    for _ in range(200):
        f = random_acyclic_function(5, rng)
        assert S_f_via_cubes(f) == S_f(f), f
    return f"{count} acyclic exhaustive + 200 sampled at n=5"


def criterion_9():
    checks = 0
    for n in range(1, 7):
        n_checks = 0
        for A in singleton_partitions(n):
            for i, j in permutations(range(1, n + 1), 2):
                assert satisfies_halfspace(A, i, j) == precequals(A, i, j)
                n_checks += 1
        checks += n_checks
    assert n_checks == 720 * 30
    return f"{checks} checks"


def criterion_10():
    for n in range(1, 9):
        assert euler_characteristic(all_faces(n)) == 1
    count = 0
    for n in range(1, 5):
        for f in all_functions(n):
            if is_acyclic(f) and not is_bijective(f):
                assert euler_characteristic(gamma_f(f)) == 0, f
                count += 1
    rng = random.Random(DEFAULT_SEED)
    sampled = 0
    while sampled < 500:
        f = random_acyclic_function(5, rng)
        if not is_bijective(f):
            assert euler_characteristic(gamma_f(f)) == 0, f
            sampled += 1
    for table, rs in (([1, 1, 1], {(1, 2), (1, 3)}), ([1, 1, 3, 3], {(1, 2), (3, 4)})):
        f = EndoFunction(table)
        assert set(rules(f)) == rs
        assert euler_characteristic(gamma_f(f)) == 0
    return f"full face sets n<=8; {count} exhaustive + {sampled} sampled; both named rule-set cases"


def criterion_11():
    rng = random.Random(DEFAULT_SEED)
    for n in range(1, 8):
        for _ in range(100):
            A = ExactMatrix.random(n, rng)
            assert perm_ryser(A) == perm_brute(A), A
    return "700 matrices"


def criterion_12():
    cmd = [sys.executable, "-m", "opdet", "coeffs", "4", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert a.count(b"\n") == 4**4 + 1
    return f"{len(a)} bytes identical"


CRITERIA = [globals()[f"criterion_{k}"] for k in range(1, 13)]


def _run(k, fn):
    try:
        detail = fn()
    except AssertionError as exc:
        RESULTS.append(f"FAIL criterion {k:>2}: {exc}")
        raise
    RESULTS.append(f"PASS criterion {k:>2}: {detail}")


@pytest.mark.parametrize("k", range(1, 13))
def test_criterion(k):
    _run(k, CRITERIA[k - 1])


if __name__ == "__main__":
    failed = 0
    for k, fn in enumerate(CRITERIA, start=1):
        try:
            _run(k, fn)
        except AssertionError:
            failed += 1
        print(RESULTS[-1], flush=True)
    sys.exit(1 if failed else 0)
