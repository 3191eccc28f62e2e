"""Endofunctions ``f: {1..n} -> {1..n}``: cycles, flattening, rule sets, forests.

Every function indexes one monomial ``a_f = prod_j a_{f(j), j}`` of the
expanded determinant.  Fixed points count as cycles of length one throughout
(so ``sign`` counts them, and :func:`cycles` lists them).  Flattening
collapses each cycle, fixed points included, to a single point; because a
fixed point collapses onto itself this gives the same reduced domain as
treating fixed points as non-cycle elements.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .limits import DomainError, ParseError


class EndoFunction:
    """A total function on ``{1..n}`` stored as ``table[j-1] = f(j)``.

    >>> f = EndoFunction([1, 3, 2, 3, 6, 5])
    >>> f(4), str(f)
    (3, '6: 1 3 2 3 6 5')
    """

    __slots__ = ("n", "table")

    def __init__(self, table):
        table = tuple(table)
        n = len(table)
        if n < 1:
            raise ValueError("function table must be nonempty")
        for v in table:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ValueError(f"table entries must lie in 1..{n}, got {v!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("EndoFunction is immutable")

    def __call__(self, j):
        return self.table[j - 1]

    def __eq__(self, other):
        if isinstance(other, EndoFunction):
            return self.table == other.table
        return NotImplemented

    def __hash__(self):
        return hash(self.table)

    def __lt__(self, other):
        return (self.n, self.table) < (other.n, other.table)

    def __repr__(self):
        return f"EndoFunction({list(self.table)!r})"

    def __str__(self):
        return f"{self.n}: " + " ".join(map(str, self.table))

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text):
        """Parse ``"n: t1 t2 ... tn"``."""
        head, sep, body = text.partition(":")
        if not sep:
            raise ParseError(f"expected 'n: t1 ... tn', got {text!r}")
        try:
            n = int(head)
            table = [int(t) for t in body.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"non-integer token in {text!r}") from None
        if len(table) != n:
            raise ParseError(f"declared n={n} but table has {len(table)} entries")
        try:
            return cls(table)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def as_function(f):
    return f if isinstance(f, EndoFunction) else EndoFunction(f)


def all_functions(n):
    """All ``n**n`` functions on ``{1..n}`` in lexicographic table order."""
    table = [1] * n
    while True:
        yield EndoFunction(table)
        j = n - 1
        while j >= 0 and table[j] == n:
            table[j] = 1
            j -= 1
        if j < 0:
            return
        table[j] += 1


def random_function(n, rng):
    return EndoFunction([rng.randint(1, n) for _ in range(n)])


def random_acyclic_function(n, rng):
    """Uniform over acyclic functions, by rejection from uniform functions."""
    while True:
        f = random_function(n, rng)
        if is_acyclic(f):
            return f


# --- cycle structure --------------------------------------------------------


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple  # each cycle a tuple starting at its minimum, sorted by minimum
    non_cycle: frozenset
    domain_size: int

    def cycle_of(self, i):
        for c in self.cycles:
            if i in c:
                return c
        return None


def cycles(f):
    """Split ``{1..n}`` into the cycles of ``f`` and the elements on no cycle."""
    f = as_function(f)
    n = f.n
    state = [0] * (n + 1)  # 0 unvisited, 1 on current walk, 2 finished
    on_cycle = [False] * (n + 1)
    found = []
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        x = start
        while not state[x]:
            state[x] = 1
            path.append(x)
            x = f(x)
        if state[x] == 1:
            # walked back into this path: the tail from x is a new cycle
            cyc = path[path.index(x) :]
            for c in cyc:
                on_cycle[c] = True
            k = cyc.index(min(cyc))
            found.append(tuple(cyc[k:] + cyc[:k]))
        for p in path:
            state[p] = 2
    found.sort()
    non_cycle = frozenset(i for i in range(1, n + 1) if not on_cycle[i])
    return CycleDecomposition(tuple(found), non_cycle, len(found) + len(non_cycle))


def is_acyclic(f):
    """True iff the only cycles of ``f`` are fixed points."""
    return all(len(c) == 1 for c in cycles(f).cycles)


def is_bijective(f):
    f = as_function(f)
    return len(set(f.table)) == f.n


def sign(f):
    """Sign of a permutation, ``(-1)^(n - number of cycles)``."""
    f = as_function(f)
    if not is_bijective(f):
        raise DomainError(f"{f} is not a bijection")
    return -1 if (f.n - len(cycles(f).cycles)) % 2 else 1


class Flattening(NamedTuple):
    function: EndoFunction
    relabel: dict  # original representative -> label in 1..|D_f|
    decomposition: CycleDecomposition


def flatten(f):
    """Collapse every cycle of ``f`` to one fixed point.

    Each cycle is represented by its minimum element; the reduced domain is
    those representatives together with the non-cycle elements, sorted and
    relabelled ``1..|D_f|``.  Returns ``(fbar, relabel, decomposition)``;
    ``relabel`` maps each original representative to its new label.

    >>> flatten(EndoFunction([1, 3, 2, 3, 6, 5])).function
    EndoFunction([1, 2, 2, 4])
    """
    f = as_function(f)
    dec = cycles(f)
    rep = {}
    for c in dec.cycles:
        for x in c:
            rep[x] = c[0]
    domain = sorted(set(rep.values()) | dec.non_cycle)
    relabel = {x: k for k, x in enumerate(domain, start=1)}
    table = []
    for x in domain:
        if x in rep:
            table.append(relabel[x])
        else:
            y = f(x)
            table.append(relabel[rep.get(y, y)])
    return Flattening(EndoFunction(table), relabel, dec)


# --- rules and forests ------------------------------------------------------


class RuleSet:
    """The precedence rules ``p <= q`` of an acyclic function, transitively
    closed and without the vacuous reflexive pairs."""

    __slots__ = ("n", "pairs")

    def __init__(self, n, pairs):
        self.n = n
        self.pairs = frozenset(pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if isinstance(other, RuleSet):
            return self.n == other.n and self.pairs == other.pairs
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __repr__(self):
        body = ", ".join(f"{p}<={q}" for p, q in self)
        return f"RuleSet({{{body}}})"

    def satisfied_by(self, B):
        """True iff every rule ``p <= q`` holds in the ordered partition ``B``."""
        where = B.word
        return all(where[p - 1] <= where[q - 1] for p, q in self.pairs)


def require_acyclic(f, what):
    if not is_acyclic(f):
        raise DomainError(f"{what} needs an acyclic function; {f} has a cycle of length >= 2")


def rules(f):
    """Rules ``p <= q`` for every proper ancestor ``p`` of ``q`` in the forest."""
    f = as_function(f)
    require_acyclic(f, "rules")
    pairs = set()
    for q in range(1, f.n + 1):
        p = q
        while f(p) != p:
            p = f(p)
            pairs.add((p, q))
    return RuleSet(f.n, pairs)


@dataclass(frozen=True)
class RootedForest:
    parent: dict  # non-root q -> f(q)
    roots: tuple
    depth: dict

    def children(self, p):
        return sorted(q for q, par in self.parent.items() if par == p)


def forest(f):
    """View an acyclic function as a rooted forest whose roots are its fixed points."""
    f = as_function(f)
    require_acyclic(f, "forest")
    parent = {q: f(q) for q in range(1, f.n + 1) if f(q) != q}
    roots = tuple(q for q in range(1, f.n + 1) if f(q) == q)
    depth = {}

    def walk(q):
        if q not in depth:
            depth[q] = 0 if q not in parent else walk(parent[q]) + 1
        return depth[q]

    for q in range(1, f.n + 1):
        walk(q)
    return RootedForest(parent, roots, depth)
