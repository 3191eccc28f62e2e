"""Verification suites: each checks one identity of the expansion end to end.

The suites back the ``opdet verify`` command.  Each returns a
:class:`SuiteResult`; none raises on a failed check.  Sampled suites draw
from ``random.Random(seed)`` so a given seed always checks the same inputs.
"""

import random
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .endofunctions import (
    EndoFunction,
    all_functions,
    cycles,
    is_acyclic,
    is_bijective,
    random_acyclic_function,
    random_function,
)
from .expansion import (
    S_f,
    S_f_via_cubes,
    coefficient_direct,
    coefficient_table,
    coefficient_via_flattening,
    det_terrible,
    factor_pattern,
    term_for_partition,
)
from .export import coefficients_csv
from .limits import DEFAULT_SEED
from .matrix import ExactMatrix, det_bareiss, det_leibniz, perm_brute, perm_ryser
from .partitions import (
    enumerate_ordered_partitions,
    fubini,
    precequals,
    singleton_partitions,
    stirling2,
    stirling_alternating_identity,
)
from .permutahedron import all_faces, euler_characteristic, gamma_f, satisfies_halfspace

# Ordered Bell numbers for n = 0..7, as tabulated in the literature.
FUBINI_KNOWN = (1, 1, 3, 13, 75, 541, 4683, 47293)

# Coefficients of the 2x2 expansion, keyed by function table (f(1), f(2)).
GOLDEN_2X2 = {(1, 1): 0, (1, 2): 1, (2, 2): 0, (2, 1): -1}

# The thirteen signed products of the 3x3 expansion, transcribed term by
# term.  Each entry is (sign, rows summed in column 1, column 2, column 3).
DISPLAY_3X3 = (
    (+1, "1", "12", "123"),
    (+1, "1", "123", "13"),
    (+1, "12", "2", "123"),
    (+1, "123", "2", "23"),
    (+1, "13", "123", "3"),
    (+1, "123", "23", "3"),
    (-1, "1", "123", "123"),
    (-1, "123", "2", "123"),
    (-1, "123", "123", "3"),
    (-1, "12", "12", "123"),
    (-1, "13", "123", "13"),
    (-1, "123", "23", "23"),
    (+1, "123", "123", "123"),
)

# Two acyclic functions whose face sets have Euler characteristic 0:
# a_11 a_12 a_13 (rules 1<=2, 1<=3) and a_11 a_12 a_33 a_34 (rules 1<=2, 3<=4).
CHI_ZERO_CASES = (EndoFunction([1, 1, 1]), EndoFunction([1, 1, 3, 3]))


@dataclass
class SuiteResult:
    name: str
    criterion: int
    passed: bool = True
    checked: int = 0
    notes: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def fail(self, msg):
        self.passed = False
        if len(self.failures) < 10:
            self.failures.append(msg)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = "; ".join(self.notes)
        out = f"[{status}] {self.criterion:>2} {self.name}: {self.checked} checks"
        if extra:
            out += f" ({extra})"
        for msg in self.failures:
            out += f"\n        {msg}"
        return out


def _pattern(rows):
    return frozenset(int(c) for c in rows)


def suite_oracle(n_max=6, trials=100, seed=DEFAULT_SEED):
    res = SuiteResult("oracle", 1)
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for _ in range(trials):
            A = ExactMatrix.random(n, rng)
            t, b, lz = det_terrible(A), det_bareiss(A), det_leibniz(A)
            res.checked += 1
            if not t == b == lz:
                res.fail(f"n={n} {A!r}: terrible={t} bareiss={b} leibniz={lz}")
    res.notes.append(f"n=1..{n_max}, {trials} matrices each, seed={seed}")
    return res


def suite_golden2(**_):
    res = SuiteResult("golden2", 2)
    table = coefficient_table(2)
    res.checked = len(table)
    if dict(table.entries) != GOLDEN_2X2:
        res.fail(f"coefficient_table(2) = {dict(table.entries)}")
    return res


def suite_expansion3(**_):
    res = SuiteResult("expansion3", 3)
    parts = list(enumerate_ordered_partitions(3))
    if len(parts) != 13:
        res.fail(f"{len(parts)} partition terms, expected 13")
    signs = {}
    for B in parts:
        key = (B.r, -1 if (3 - B.r) % 2 else 1)
        signs[key] = signs.get(key, 0) + 1
    if signs != {(3, 1): 6, (2, -1): 6, (1, 1): 1}:
        res.fail(f"sign profile {signs}")
    ours = sorted(((-1 if (3 - B.r) % 2 else 1, factor_pattern(B)) for B in parts), key=repr)
    theirs = sorted(((s, tuple(_pattern(c) for c in cols)) for s, *cols in DISPLAY_3X3), key=repr)
    res.checked = len(parts)
    if ours != theirs:
        res.fail("factor patterns differ from the transcribed 3x3 expansion")
    # the numeric term must be the product of the pattern's column sums
    A = ExactMatrix([[2, -3, 5], [7, 11, -13], [17, -19, 23]])
    for B in parts:
        expect = 1
        for j, rows in enumerate(factor_pattern(B)):
            expect *= sum(A[i - 1][j] for i in rows)
        if term_for_partition(A, B) != expect:
            res.fail(f"term_for_partition disagrees with its pattern at {B}")
    return res


def suite_dichotomy(n_max=4, trials=500, seed=DEFAULT_SEED):
    res = SuiteResult("dichotomy", 4)

    def check(f):
        c = coefficient_direct(f)
        if is_bijective(f):
            want = -1 if (f.n - len(cycles(f).cycles)) % 2 else 1
        else:
            want = 0
        res.checked += 1
        if c != want:
            res.fail(f"{f}: c_f={c}, expected {want}")

    for n in range(1, n_max + 1):
        for f in all_functions(n):
            check(f)
    exhaustive = res.checked
    rng = random.Random(seed)
    for _ in range(trials):
        check(random_function(n_max + 1, rng))
    res.notes.append(f"{exhaustive} exhaustive for n<={n_max}; {trials} sampled at n={n_max + 1}")
    return res


def suite_routes(n_max=4, **_):
    res = SuiteResult("routes", 5)
    for n in range(1, n_max + 1):
        table = coefficient_table(n)
        for f in all_functions(n):
            a, b, c = coefficient_direct(f), table[f], coefficient_via_flattening(f)
            res.checked += 1
            if not a == b == c:
                res.fail(f"{f}: direct={a} table={b} flattened={c}")
    return res


def suite_stirling(n_max=12, **_):
    res = SuiteResult("stirling", 6)
    for n in range(n_max + 1):
        res.checked += 1
        v = stirling_alternating_identity(n)
        if v != 1:
            res.fail(f"n={n}: alternating sum {v}")
    return res


def suite_fubini(n_max=7, **_):
    res = SuiteResult("fubini", 7)
    for n in range(1, n_max + 1):
        counts = {}
        seen = set()
        for B in enumerate_ordered_partitions(n):
            seen.add(B)
            counts[B.r] = counts.get(B.r, 0) + 1
        total = sum(counts.values())
        oracle = sum(factorial(k) * stirling2(n, k) for k in range(n + 1))
        res.checked += 1
        if not (total == len(seen) == fubini(n) == oracle):
            res.fail(f"n={n}: yielded {total}, distinct {len(seen)}, fubini {fubini(n)}, oracle {oracle}")
        if n < len(FUBINI_KNOWN) and oracle != FUBINI_KNOWN[n]:
            res.fail(f"n={n}: oracle {oracle} vs known {FUBINI_KNOWN[n]}")
        for k in range(1, n + 1):
            if counts.get(k, 0) != factorial(k) * stirling2(n, k):
                res.fail(f"n={n}, k={k}: {counts.get(k, 0)} partitions")
    return res


def suite_cubes(n_max=4, trials=200, seed=DEFAULT_SEED):
    res = SuiteResult("cubes", 8)

    def check(f):
        res.checked += 1
        if S_f_via_cubes(f) != S_f(f):
            res.fail(f"{f}: cube union differs from direct filter")

    for n in range(1, n_max + 1):
        for f in all_functions(n):
            if is_acyclic(f):
                check(f)
    exhaustive = res.checked
    rng = random.Random(seed)
    for _ in range(trials):
        check(random_acyclic_function(n_max + 1, rng))
    res.notes.append(f"{exhaustive} acyclic exhaustive for n<={n_max}; {trials} sampled at n={n_max + 1}")
    return res


def suite_halfspace(n_max=6, **_):
    res = SuiteResult("halfspace", 9)
    for n in range(1, n_max + 1):
        for A in singleton_partitions(n):
            for i, j in permutations(range(1, n + 1), 2):
                res.checked += 1
                if satisfies_halfspace(A, i, j) != precequals(A, i, j):
                    res.fail(f"{A}: ({i},{j})")
    return res


def suite_euler(n_max=4, trials=500, seed=DEFAULT_SEED, full_max=8):
    res = SuiteResult("euler", 10)
    for n in range(1, full_max + 1):
        res.checked += 1
        chi = euler_characteristic(all_faces(n))
        if chi != 1:
            res.fail(f"chi(all faces, n={n}) = {chi}")

    def check(f):
        res.checked += 1
        chi = euler_characteristic(gamma_f(f))
        if chi != 0:
            res.fail(f"chi(gamma_f) = {chi} for {f}")

    for n in range(1, n_max + 1):
        for f in all_functions(n):
            if is_acyclic(f) and not is_bijective(f):
                check(f)
    rng = random.Random(seed)
    sampled = 0
    while sampled < trials:
        f = random_acyclic_function(n_max + 1, rng)
        if not is_bijective(f):
            check(f)
            sampled += 1
    for f in CHI_ZERO_CASES:
        check(f)
    res.notes.append(f"full face sets n<={full_max}; {sampled} sampled at n={n_max + 1}")
    return res


def suite_permanent(n_max=7, trials=100, seed=DEFAULT_SEED):
    res = SuiteResult("permanent", 11)
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for _ in range(trials):
            A = ExactMatrix.random(n, rng)
            res.checked += 1
            r, b = perm_ryser(A), perm_brute(A)
            if r != b:
                res.fail(f"n={n} {A!r}: ryser={r} brute={b}")
    return res


def suite_determinism(n_max=4, **_):
    res = SuiteResult("determinism", 12)
    first, second = coefficients_csv(n_max), coefficients_csv(n_max)
    res.checked = 1
    if first.encode() != second.encode():
        res.fail("coefficient CSV differs between runs")
    return res


SUITES = {
    "oracle": suite_oracle,
    "golden2": suite_golden2,
    "expansion3": suite_expansion3,
    "dichotomy": suite_dichotomy,
    "routes": suite_routes,
    "stirling": suite_stirling,
    "fubini": suite_fubini,
    "cubes": suite_cubes,
    "halfspace": suite_halfspace,
    "euler": suite_euler,
    "permanent": suite_permanent,
    "determinism": suite_determinism,
}


def run_suite(name, n_max=None, trials=None, seed=DEFAULT_SEED):
    """Run one suite, overriding its size bound and sample count when given."""
    fn = SUITES[name]
    kwargs = {"seed": seed}
    if n_max is not None:
        kwargs["n_max"] = n_max
    if trials is not None:
        kwargs["trials"] = trials
    return fn(**kwargs)
