"""Exact integer matrices and the classical determinant/permanent algorithms.

Convention: ``A[i][j]`` (0-based in code, ``a_ij`` 1-based in all text I/O) is
the entry in **row i, column j**.  The ordered-partition expansion picks its
first index per column (a monomial is ``prod_j a_{f(j), j}``), so reading the
matrix transposed silently gives the determinant of the transpose, which is
the same number but a different coefficient table.

All routines use Python integers, so nothing overflows.  The brute-force ones
are capped (see :mod:`opdet.limits`).
"""

import json
from itertools import combinations

from .limits import ParseError, check_size


class ExactMatrix:
    """Immutable n x n matrix of Python integers.

    >>> A = ExactMatrix([[2, 3], [5, 7]])
    >>> A.n, A[1][0]
    (2, 5)
    """

    __slots__ = ("n", "entries")

    def __init__(self, rows):
        entries = tuple(tuple(row) for row in rows)
        n = len(entries)
        if n < 1:
            raise ValueError("matrix must have at least one row")
        for r, row in enumerate(entries):
            if len(row) != n:
                raise ValueError(f"row {r + 1} has {len(row)} entries, expected {n}")
            for x in row:
                # bool is an int subclass but almost certainly a caller bug
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"entries must be integers, got {x!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.entries]!r})"

    def rows(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return ExactMatrix(zip(*self.entries))

    def swap_rows(self, i, j):
        rows = self.rows()
        rows[i], rows[j] = rows[j], rows[i]
        return ExactMatrix(rows)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n):
        return cls([[1] * n for _ in range(n)])

    @classmethod
    def random(cls, n, rng, low=-9, high=9):
        """Entries uniform on ``[low, high]`` drawn from ``rng`` (a
        :class:`random.Random`)."""
        return cls([[rng.randint(low, high) for _ in range(n)] for _ in range(n)])

    # --- text / JSON formats -------------------------------------------

    def to_text(self):
        lines = [str(self.n)]
        lines += [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    def to_json(self):
        # integers beyond 2**53 are emitted as strings so JS readers stay exact
        def enc(x):
            return x if abs(x) < 2**53 else str(x)

        return json.dumps(
            {"schema": 1, "n": self.n, "entries": [[enc(x) for x in row] for row in self.entries]}
        )

    @classmethod
    def from_text(cls, text):
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty matrix text")
        if len(lines[0]) != 1:
            raise ParseError("first line must hold only the dimension n")
        n = _parse_int(lines[0][0], "dimension")
        if n < 1:
            raise ParseError(f"dimension must be positive, got {n}")
        body = lines[1:]
        if len(body) != n:
            raise ParseError(f"expected {n} rows, found {len(body)}")
        rows = []
        for r, tokens in enumerate(body, start=1):
            if len(tokens) != n:
                raise ParseError(f"row {r}: expected {n} entries, found {len(tokens)}")
            rows.append([_parse_int(t, f"row {r}") for t in tokens])
        return cls(rows)

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
            raise ParseError("JSON matrix must be an object with 'n' and 'entries'")
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError(f"'n' must be a positive integer, got {n!r}")
        entries = obj["entries"]
        if not isinstance(entries, list) or len(entries) != n:
            raise ParseError(f"'entries' must hold {n} rows")
        rows = []
        for r, row in enumerate(entries, start=1):
            if not isinstance(row, list) or len(row) != n:
                raise ParseError(f"row {r}: expected {n} entries")
            rows.append([_json_int(x, r) for x in row])
        return cls(rows)

    @classmethod
    def parse(cls, text):
        """Parse either format; JSON is recognised by a leading ``{``."""
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_text(text)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.parse(fh.read())


def _parse_int(token, where):
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"{where}: not a decimal integer: {token!r}") from None


def _json_int(x, row):
    if isinstance(x, bool):
        raise ParseError(f"row {row}: booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, float) and x.is_integer() and abs(x) <= 2**53:
        return int(x)
    if isinstance(x, str):
        return _parse_int(x.strip(), f"row {row}")
    raise ParseError(f"row {row}: not an integer: {x!r}")


def as_matrix(A):
    """Coerce nested sequences to :class:`ExactMatrix`; pass matrices through."""
    return A if isinstance(A, ExactMatrix) else ExactMatrix(A)


# --- determinants ----------------------------------------------------------


def det_leibniz(A, cap=None):
    """Sum over all permutations of ``sgn(sigma) * prod_i a[i][sigma(i)]``.

    Permutations are built row by row; the sign is tracked incrementally by
    counting how many still-free columns lie left of the chosen one, and
    branches whose partial product is zero are dropped.
    """
    A = as_matrix(A)
    n = A.n
    check_size("leibniz", n, cap)
    a = A.entries

    def rec(i, free, prod, sign):
        if i == n:
            return sign * prod
        total = 0
        for pos, j in enumerate(free):
            x = a[i][j]
            if x:
                rest = free[:pos] + free[pos + 1 :]
                total += rec(i + 1, rest, prod * x, -sign if pos % 2 else sign)
        return total

    return rec(0, tuple(range(n)), 1, 1)


def det_cofactor(A, cap=None):
    """Laplace expansion along the first remaining row.

    The minor left after deleting the first k rows depends only on which
    columns remain, so minors are memoised by column set; each of the
    ``2**n`` column subsets is expanded once.
    """
    A = as_matrix(A)
    n = A.n
    check_size("cofactor", n, cap)
    a = A.entries
    memo = {}

    def minor(cols):
        # cols: tuple of remaining column indices, rows are the last len(cols)
        if len(cols) == 1:
            return a[n - 1][cols[0]]
        got = memo.get(cols)
        if got is not None:
            return got
        i = n - len(cols)
        total = 0
        for pos, j in enumerate(cols):
            x = a[i][j]
            if x:
                term = x * minor(cols[:pos] + cols[pos + 1 :])
                total += -term if pos % 2 else term
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def det_bareiss(A):
    """Fraction-free Gaussian elimination (Bareiss).  Every division is exact."""
    A = as_matrix(A)
    n = A.n
    m = A.rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - row_i[k] * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# --- permanents ------------------------------------------------------------


def perm_brute(A, cap=None):
    """Sum over all permutations of ``prod_i a[i][sigma(i)]``, no signs."""
    A = as_matrix(A)
    n = A.n
    check_size("perm_brute", n, cap)
    a = A.entries

    def rec(i, free, prod):
        if i == n:
            return prod
        total = 0
        for pos, j in enumerate(free):
            x = a[i][j]
            if x:
                total += rec(i + 1, free[:pos] + free[pos + 1 :], prod * x)
        return total

    return rec(0, tuple(range(n)), 1)


def perm_ryser(A, cap=None):
    """Ryser's inclusion-exclusion over column subsets S:

        perm(A) = sum_S (-1)^(n-|S|) prod_i sum_{j in S} a[i][j]

    Subsets are visited in Gray-code order so each step adds or removes a
    single column from the running row sums.
    """
    A = as_matrix(A)
    n = A.n
    check_size("ryser", n, cap)
    a = A.entries
    rowsums = [0] * n
    in_s = [False] * n
    size = 0
    total = 0  # the empty subset contributes prod of zeros = 0 (n >= 1)
    for g in range(1, 1 << n):
        j = (g & -g).bit_length() - 1  # bit flipped between gray(g-1) and gray(g)
        if in_s[j]:
            in_s[j] = False
            size -= 1
            for i in range(n):
                rowsums[i] -= a[i][j]
        else:
            in_s[j] = True
            size += 1
            for i in range(n):
                rowsums[i] += a[i][j]
        prod = 1
        for s in rowsums:
            prod *= s
            if not prod:
                break
        total += -prod if (n - size) % 2 else prod
    return total


def perm_ryser_direct(A, cap=None):
    """Ryser's formula written literally with ``itertools.combinations``.

    Slower than :func:`perm_ryser`; kept as a readable cross-check of the
    Gray-code bookkeeping.
    """
    A = as_matrix(A)
    n = A.n
    check_size("ryser", n, cap)
    a = A.entries
    total = 0
    for k in range(1, n + 1):
        for cols in combinations(range(n), k):
            prod = 1
            for i in range(n):
                prod *= sum(a[i][j] for j in cols)
            total += (-1) ** (n - k) * prod
    return total
