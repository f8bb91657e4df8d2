"""
charvar_betti.partitions.py
---------------------------

This module defines the ``Partition`` value type that indexes the
symplectic irreducibles S_<lambda>, plus enumeration helpers.

Usage
-----

    In [1]: from charvar_betti.partitions import Partition, enumerate_partitions

    In [2]: [str(p) for p in enumerate_partitions(4)]

    Out [2]: ['<4>', '<3,1>', '<2,2>', '<2,1,1>', '<1,1,1,1>']

    In [3]: Partition(3, 3, 1).multiplicity_form()

    Out [3]: {1: 1, 3: 2}

"""
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Tuple


class Partition(tuple):
    """
    A weakly decreasing sequence of positive integers.

    The empty partition is ``Partition()``. Instances are hashable and
    compare like tuples; use ``sort_key`` for the canonical
    graded reverse-lexicographic order.
    """

    def __new__(cls, *parts: int):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        parts = tuple(int(p) for p in parts)

        for i, part in enumerate(parts):
            if part <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and part > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")

        return super().__new__(cls, parts)

    @classmethod
    def column(cls, length: int) -> "Partition":
        """The single column <1^length>."""
        return cls((1,) * length)

    @classmethod
    def two_columns(cls, twos: int, ones: int) -> "Partition":
        """The shape <2^twos 1^ones>."""
        return cls((2,) * twos + (1,) * ones)

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int]) -> "Partition":
        parts = []
        for value in sorted(multiplicities, reverse=True):
            parts.extend([value] * multiplicities[value])
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    def is_column(self) -> bool:
        return self.width <= 1

    def conjugate(self) -> "Partition":
        return Partition(
            sum(1 for part in self if part > col) for col in range(self.width)
        )

    def multiplicity_form(self) -> Dict[int, int]:
        """
        Multiplicities ``{t: l_t}`` of the form 1^{l_1} 2^{l_2} 3^{l_3} ...

        :return: map from part value to the number of parts with that value
        :rtype: dict
        """
        return dict(sorted(Counter(self).items()))

    def contains(self, other: "Partition") -> bool:
        """True when the Young diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def sort_key(self) -> Tuple:
        return (self.size, tuple(-p for p in self))

    def to_text(self) -> str:
        """Comma-joined parts, as used in cache records. Empty for the empty partition."""
        return ",".join(str(p) for p in self)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))

    def __str__(self):
        return "<" + ",".join(str(p) for p in self) + ">"

    def __repr__(self):
        return "Partition(" + ", ".join(str(p) for p in self) + ")"


EMPTY = Partition()


def enumerate_partitions(n: int, max_part: int = None) -> Iterator[Partition]:
    """
    Yield every partition of ``n`` exactly once, in reverse-lexicographic
    order: (n), (n-1, 1), ..., (1, ..., 1).

    :param n: size of the partitions
    :type n: int
    :param max_part: optional bound on the largest part
    :type max_part: int, optional
    """
    if n < 0:
        raise ValueError(f"cannot enumerate partitions of a negative number: {n}")

    for parts in _partitions(n, n if max_part is None else min(n, max_part)):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of size 0..n in graded reverse-lexicographic order."""
    for size in range(n + 1):
        yield from enumerate_partitions(size)


def partitions_inside(outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions of ``size`` whose diagram fits inside ``outer``."""
    for candidate in enumerate_partitions(size, max_part=outer.width):
        if outer.contains(candidate):
            yield candidate


def canonical_order(partitions: Iterable[Partition]) -> list:
    return sorted(partitions, key=Partition.sort_key)


def partition_count(n: int) -> int:
    return len(_partitions(n, n)) if n >= 0 else 0
