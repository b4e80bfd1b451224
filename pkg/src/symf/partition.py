"""Integer partitions (Young diagrams) and their basic statistics."""
from collections import Counter
from functools import lru_cache
from math import factorial, prod

from .config import check_degree
from .errors import NonPositivePart


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Instances are immutable and hashable. ``Partition([1, 3, 2])`` sorts its
    input, so ``Partition([1, 3, 2]) == (3, 2, 1)``. Ordering with ``<`` is the
    canonical term order: degree ascending, then reverse-lexicographic.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        for p in parts:
            if p <= 0:
                raise NonPositivePart("partition parts must be positive, got %r" % (p,))
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def _trusted(cls, parts):
        # skips validation; callers guarantee a weakly decreasing positive tuple
        return tuple.__new__(cls, parts)

    @property
    def parts(self):
        return list(self)

    @property
    def degree(self):
        return sum(self)

    @property
    def rows(self):
        return len(self)

    def sort_key(self):
        return (sum(self), tuple(-p for p in self))

    def __lt__(self, other):
        return self.sort_key() < Partition(other).sort_key()

    def __le__(self, other):
        return self.sort_key() <= Partition(other).sort_key()

    def __gt__(self, other):
        return self.sort_key() > Partition(other).sort_key()

    def __ge__(self, other):
        return self.sort_key() >= Partition(other).sort_key()

    def __repr__(self):
        return "Partition(%s)" % list(self)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self) + "]"

    def conjugate(self):
        return conjugate(self)

    def multiplicities(self):
        return Counter(self)

    def to_json(self):
        return list(self)


def make_partition(parts):
    return Partition(parts)


def union(lam, mu):
    """Sorted concatenation of parts: the index of a product in a multiplicative basis."""
    return Partition._trusted(tuple(sorted(tuple(lam) + tuple(mu), reverse=True)))


def conjugate(lam):
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition._trusted(tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)))


def z_factor(lam):
    """Order of the centralizer of a permutation with cycle type ``lam``."""
    return prod(i ** m * factorial(m) for i, m in Counter(Partition(lam)).items())


def hook_lengths(lam):
    lam = Partition(lam)
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def hook_dimension(lam):
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = Partition(lam)
    return factorial(lam.degree) // prod(h for row in hook_lengths(lam) for h in row)


def dominates(lam, mu):
    """True if ``lam`` dominates ``mu`` (same degree, partial sums of lam >= those of mu)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions(n, largest, max_rows):
    if n == 0:
        return ((),)
    if max_rows == 0:
        return ()
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first, max_rows - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n, max_rows=None):
    """All partitions of ``n`` in canonical (reverse-lexicographic) order.

    >>> partitions_of(3)
    [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    """
    if n < 0:
        return []
    check_degree(n)
    rows = n if max_rows is None else max_rows
    return [Partition._trusted(p) for p in _partitions(n, n, rows)]


def partitions_up_to(d, max_rows=None):
    out = []
    for n in range(d + 1):
        out.extend(partitions_of(n, max_rows))
    return out


def horizontal_strips(lam, k):
    """Partitions ``nu`` inside ``lam`` with ``lam/nu`` a horizontal strip of size ``k``.

    Yields ``nu`` such that lam[i+1] <= nu[i] <= lam[i].
    """
    lam = tuple(lam)
    L = len(lam)

    def rec(i, remaining, acc):
        if i == L:
            if remaining == 0:
                yield Partition._trusted(tuple(p for p in acc if p > 0))
            return
        lower = lam[i + 1] if i + 1 < L else 0
        for take in range(min(lam[i] - lower, remaining), -1, -1):
            acc.append(lam[i] - take)
            yield from rec(i + 1, remaining - take, acc)
            acc.pop()

    yield from rec(0, k, [])
