"""Partition combinatorics: the index set for everything else in this package.

Partitions index the symmetric-polynomial bases, the generalized Pochhammer
symbols and the rows/columns of moment matrices.  The canonical ordering used
everywhere is reverse lexicographic within a fixed weight (most dominant
partition first), and weight-ascending across weights.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers, trailing zeros stripped.

    Instances behave as plain tuples (hashable, usable as dict keys); the empty
    partition is ``Partition()``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition{tuple(self)}"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, q: int) -> tuple:
        """Parts extended with zeros to length q."""
        if len(self) > q:
            raise ValueError(f"partition {tuple(self)} has more than {q} parts")
        return tuple(self) + (0,) * (q - len(self))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self):
        """Yield zero-based (row, column) cells of the diagram."""
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def arm(self, i: int, j: int) -> int:
        """Number of cells strictly right of (i, j)."""
        return self[i] - (j + 1)

    def leg(self, i: int, j: int) -> int:
        """Number of cells strictly below (i, j)."""
        return sum(1 for p in self[i + 1:] if p > j)

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: every prefix sum of self >= that of other.

        Only meaningful between partitions of equal weight; for unequal
        weights this returns the raw prefix-sum comparison.
        """
        s, t = 0, 0
        for i in range(max(len(self), len(other))):
            s += self[i] if i < len(self) else 0
            t += other[i] if i < len(other) else 0
            if s < t:
                return False
        return True


@lru_cache(maxsize=None)
def enumerate_partitions(weight: int, max_parts: int) -> tuple:
    """All partitions of `weight` with at most `max_parts` parts.

    Returned in reverse lexicographic order, i.e. most dominant first:
    (4), (3,1), (2,2) for weight 4 with two parts.  This is the canonical
    index order used throughout.
    """
    if weight < 0:
        raise ValueError("weight must be >= 0")
    if max_parts < 1:
        raise ValueError("max_parts must be >= 1")
    out = []

    def descend(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_parts:
            return
        for p in range(min(remaining, largest), 0, -1):
            descend(remaining - p, p, prefix + (p,))

    descend(weight, weight, ())
    return tuple(out)


def partitions_up_to(max_weight: int, max_parts: int) -> list:
    """Partitions of weight 0..max_weight, weight ascending then reverse-lex."""
    out = []
    for w in range(max_weight + 1):
        out.extend(enumerate_partitions(w, max_parts))
    return out


@lru_cache(maxsize=None)
def monomial_orbit(lam: Partition, q: int) -> tuple:
    """Distinct rearrangements of the partition padded to q slots.

    These are the exponent vectors of the monomial symmetric polynomial m_lam
    in q variables.
    """
    return tuple(sorted(set(permutations(Partition(lam).padded(q)))))


def monomial_at_ones(lam, q: int) -> int:
    """Value of m_lam at (1, ..., 1): the orbit size."""
    padded = Partition(lam).padded(q)
    counts = {}
    for v in padded:
        counts[v] = counts.get(v, 0) + 1
    r = factorial(q)
    for c in counts.values():
        r //= factorial(c)
    return r
