"""Ordered set partitions of ``{1..n}`` and the poset they form.

Blocks are stored as bitmasks (element ``e`` is bit ``e - 1``), so ``n`` is
capped at 63.  The display form is the slash notation ``13/2/4``: elements of
a block sorted and concatenated, blocks separated by ``/``.  For ``n >= 10``
elements inside a block are separated by commas to stay unambiguous.

Enumeration order
-----------------
An ordered partition with ``r`` blocks is the same thing as a surjective
*assignment word* ``w = (w_1, ..., w_n)`` onto ``{1..r}``, where ``w_i`` is
the position of the block holding ``i``.  :func:`enumerate_ordered_partitions`
yields partitions by increasing ``r`` and, within a fixed ``r``, in
lexicographic order of ``w``.  This order is part of the public contract:
exports and golden files rely on it.
"""

from itertools import permutations
from math import factorial

from .limits import ParseError, SizeError, check_size

MAX_N = 63


def _mask(elements):
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def mask_elements(mask):
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


class OrderedPartition:
    """An ordered sequence of disjoint nonempty blocks covering ``{1..n}``.

    Equality and hashing use the full ordered block sequence, so ``1/23`` and
    ``23/1`` differ.

    >>> B = OrderedPartition.from_blocks([[2], [1, 3], [4, 5]])
    >>> str(B), B.r, B.block_index(3)
    ('2/13/45', 3, 2)
    """

    __slots__ = ("n", "masks", "_where")

    def __init__(self, n, masks):
        masks = tuple(masks)
        if not 1 <= n <= MAX_N:
            raise SizeError(f"n must be in 1..{MAX_N}, got {n}")
        full = (1 << n) - 1
        seen = 0
        for m in masks:
            if m <= 0:
                raise ValueError("blocks must be nonempty")
            if m & seen:
                raise ValueError("blocks must be disjoint")
            seen |= m
        if seen != full:
            raise ValueError(f"blocks must cover exactly 1..{n}")
        where = [0] * n
        for k, m in enumerate(masks, start=1):
            for e in mask_elements(m):
                where[e - 1] = k
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", masks)
        object.__setattr__(self, "_where", tuple(where))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedPartition is immutable")

    @classmethod
    def _trusted(cls, n, masks, where):
        # skips validation; callers guarantee masks/where describe a partition
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "masks", masks)
        object.__setattr__(obj, "_where", where)
        return obj

    @classmethod
    def from_blocks(cls, blocks, n=None):
        blocks = [list(b) for b in blocks]
        if n is None:
            n = max((max(b) for b in blocks if b), default=0)
        for b in blocks:
            if len(set(b)) != len(b):
                raise ValueError(f"repeated element in block {b}")
            if any(not 1 <= e <= n for e in b):
                raise ValueError(f"block {b} has elements outside 1..{n}")
        return cls(n, [_mask(b) for b in blocks])

    @classmethod
    def from_word(cls, word):
        """Build from an assignment word: ``word[i-1]`` is the block of ``i``."""
        word = tuple(word)
        n = len(word)
        r = max(word)
        if not 1 <= n <= MAX_N or min(word) < 1 or len(set(word)) != r:
            raise ValueError(f"{word} is not a surjection onto 1..{r}")
        masks = [0] * r
        for i, k in enumerate(word):
            masks[k - 1] |= 1 << i
        return cls._trusted(n, tuple(masks), word)

    @classmethod
    def singleton(cls, perm):
        """The singleton partition ``w_1/w_2/.../w_n`` for a permutation word."""
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{n}")
        where = [0] * n
        for pos, w in enumerate(perm, start=1):
            where[w - 1] = pos
        return cls._trusted(n, tuple(1 << (w - 1) for w in perm), tuple(where))

    @classmethod
    def parse(cls, text, n=None):
        """Parse slash notation: ``"13/2/4"`` or ``"1,3/2/4"``."""
        text = text.strip()
        if not text:
            raise ParseError("empty partition text")
        blocks = []
        for part in text.split("/"):
            part = part.strip()
            if not part:
                raise ParseError(f"empty block in {text!r}")
            if "," in part or " " in part:
                tokens = part.replace(",", " ").split()
            else:
                tokens = list(part)
            try:
                blocks.append([int(t) for t in tokens])
            except ValueError:
                raise ParseError(f"bad block {part!r}") from None
        try:
            return cls.from_blocks(blocks, n)
        except (ValueError, SizeError) as exc:
            raise ParseError(str(exc)) from None

    @property
    def r(self):
        return len(self.masks)

    @property
    def blocks(self):
        return tuple(tuple(mask_elements(m)) for m in self.masks)

    @property
    def word(self):
        """Assignment word ``(beta(1), ..., beta(n))``."""
        return self._where

    def is_singleton(self):
        return self.r == self.n

    def block_index(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"element {i} outside 1..{self.n}")
        return self._where[i - 1]

    def __eq__(self, other):
        if isinstance(other, OrderedPartition):
            return self.n == other.n and self.masks == other.masks
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.masks))

    def __lt__(self, other):
        # enumeration order: block count, then assignment word
        return (self.r, self._where) < (other.r, other._where)

    def __str__(self):
        sep = "," if self.n >= 10 else ""
        return "/".join(sep.join(map(str, b)) for b in self.blocks)

    def __repr__(self):
        return f"OrderedPartition({str(self)!r})"

    def to_json(self):
        return {"blocks": [list(b) for b in self.blocks], "parts": self.r}


# --- structure of a single partition ---------------------------------------


def prefix_unions(B):
    """``(beta'_1, ..., beta'_r)`` with ``beta'_k`` the union of the first k blocks."""
    out = []
    acc = 0
    for m in B.masks:
        acc |= m
        out.append(frozenset(mask_elements(acc)))
    return tuple(out)


def prefix_masks(B):
    out = []
    acc = 0
    for m in B.masks:
        acc |= m
        out.append(acc)
    return tuple(out)


def block_index(B, i):
    return B.block_index(i)


def precequals(B, i, j):
    """True iff ``i`` sits in an earlier block than ``j`` or the same one."""
    return B.block_index(i) <= B.block_index(j)


def merge_adjacent(B, k):
    """Merge blocks ``k`` and ``k+1`` (1-based): one covering step down the poset."""
    if not 1 <= k < B.r:
        raise ValueError(f"merge position {k} outside 1..{B.r - 1}")
    m = B.masks
    where = tuple(b - 1 if b > k else b for b in B.word)
    return OrderedPartition._trusted(B.n, m[: k - 1] + (m[k - 1] | m[k],) + m[k + 1 :], where)


def covers_below(B):
    """All partitions directly below ``B``: one per adjacent pair of blocks."""
    return [merge_adjacent(B, k) for k in range(1, B.r)]


def lower_set_cube(A):
    """Every coarsening of a singleton partition that keeps block order.

    Each of the ``n - 1`` gaps between consecutive singletons is either kept
    or merged, so the result has exactly ``2**(n-1)`` members.
    """
    if not A.is_singleton():
        raise ValueError(f"{A} is not a singleton partition")
    n = A.n
    order = A.masks
    out = set()
    for cuts in range(1 << (n - 1)):
        masks = []
        cur = order[0]
        for g in range(n - 1):
            if cuts >> g & 1:
                masks.append(cur)
                cur = order[g + 1]
            else:
                cur |= order[g + 1]
        masks.append(cur)
        out.add(OrderedPartition(n, masks))
    return out


# --- enumeration -----------------------------------------------------------


def _partitions_with_r_blocks(n, r):
    # Depth-first over assignment words in lexicographic order, carrying the
    # block masks along so each leaf costs one tuple copy.
    make = OrderedPartition._trusted
    word = [0] * n
    masks = [0] * r
    last = n - 1

    def rec(pos, missing):
        left = n - pos
        bit = 1 << pos
        if pos == last:
            # one slot left: at most one label may still be missing
            for k in range(1, r + 1):
                if missing and masks[k - 1]:
                    continue
                word[pos] = k
                masks[k - 1] |= bit
                yield make(n, tuple(masks), tuple(word))
                masks[k - 1] ^= bit
            return
        for k in range(1, r + 1):
            fresh = not masks[k - 1]
            # every label not yet used must still fit in the remaining slots
            if missing - fresh > left - 1:
                continue
            word[pos] = k
            masks[k - 1] |= bit
            yield from rec(pos + 1, missing - fresh)
            masks[k - 1] ^= bit

    yield from rec(0, r)


def enumerate_ordered_partitions(n, cap=None, blocks=None):
    """Yield every ordered partition of ``{1..n}`` exactly once.

    Order: by number of blocks, then lexicographically by assignment word
    (see the module docstring).  Pass ``blocks=r`` to restrict to partitions
    with exactly ``r`` blocks.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_size("partitions", n, cap)
    if n > MAX_N:
        raise SizeError(f"n must be at most {MAX_N}")
    sizes = range(1, n + 1) if blocks is None else [blocks]
    for r in sizes:
        if 1 <= r <= n:
            yield from _partitions_with_r_blocks(n, r)


def singleton_partitions(n):
    """The ``n!`` singleton partitions, in lexicographic order of their words."""
    for p in permutations(range(1, n + 1)):
        yield OrderedPartition.singleton(p)


# --- counting --------------------------------------------------------------


def stirling2(n, k):
    """Stirling number of the second kind via ``S(n,k) = k S(n-1,k) + S(n-1,k-1)``."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"stirling2 needs 0 <= k <= n, got n={n}, k={k}")
    return stirling2_row(n)[k]


def stirling2_row(n):
    """``[S(n,0), ..., S(n,n)]``."""
    row = [1]
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for k in range(1, m + 1):
            new[k] = (k * row[k] if k < m else 0) + row[k - 1]
        row = new
    return row


def fubini(n, cap=None):
    """Number of ordered partitions of an n-set: ``sum_k k! S(n,k)``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_size("fubini", n, cap)
    return sum(factorial(k) * s for k, s in enumerate(stirling2_row(n)))


def stirling_alternating_identity(n):
    """``sum_k (-1)^(n-k) k! S(n,k)``, which is 1 for every ``n >= 0``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return sum((-1) ** (n - k) * factorial(k) * s for k, s in enumerate(stirling2_row(n)))
