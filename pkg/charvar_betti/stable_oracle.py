"""
charvar_betti.stable_oracle.py
------------------------------

Stable cohomology of M_g and M_{g,1} with coefficients in a symplectic
irreducible S_<lambda>, as truncated Poincare series.

Two oracles implement the ``StableOracle`` interface:

    - ``ColumnOracle`` handles single columns <1^j> only, through the
      E / E~ series sums.
    - ``SetPartitionOracle`` handles every partition. Stable H^*(b; V^{(x)q})
      is free over the base ring on products of twisted tautological
      classes, one per block of a set partition of {1..q}; a block of size s
      with label a sits in degree 2a + s - 2. Taking the sign-twisted
      symmetric group invariants and pairing against s_{lambda'} gives

          H^*(b; S_<lambda>) = base(b) * < s_{lambda'}, prod 1 / (1 - t^{2a+s-2} x^m) >

      where the product runs over monomials x^m of degree s >= 1 and
      allowed labels a. The Schur coefficient is read off the alternant
      in l = lambda_1 variables.

Usage
-----

    In [1]: from charvar_betti.stable_oracle import BaseSpace, oracle_column

    In [2]: oracle_column(1, BaseSpace.MG, 9).coefficients

    Out [2]: [0, 0, 0, 1, 0, 2, 0, 4, 0, 7]

"""
import warnings
from abc import ABC, abstractmethod
from enum import Enum
from functools import lru_cache
from itertools import permutations
from math import ceil
from typing import Dict, Iterable, List, Tuple

from .errors import ParityViolation, UnsupportedPartition
from .partitions import EMPTY, Partition, enumerate_partitions
from .series import PoincareSeries

ORACLE_VERSION = "1"


class BaseSpace(str, Enum):
    MG = "Mg"
    MG1 = "Mg1"

    def __str__(self):
        return self.value


@lru_cache(maxsize=None)
def base_series(base: BaseSpace, degree: int) -> PoincareSeries:
    """
    Free polynomial ring on kappa_i (degree 2i), with an extra e_2 over M_{g,1}.

    :param base: ``BaseSpace.MG`` or ``BaseSpace.MG1``
    :type base: BaseSpace
    :param degree: truncation degree
    :type degree: int
    """
    series = PoincareSeries.free_generators(range(2, degree + 1, 2), degree)
    if BaseSpace(base) is BaseSpace.MG1:
        series = series.divide_by_one_minus(2)
    return series


def _e_type_series(lam: Partition, degree: int, exponent) -> PoincareSeries:
    series = PoincareSeries.one(degree)
    for t, count in Partition(lam).multiplicity_form().items():
        series = series * PoincareSeries.monomial(2 * exponent(t, count), degree)
        series = series * PoincareSeries.free_generators(range(2, 2 * count + 1, 2), degree)
    return series


@lru_cache(maxsize=None)
def E_series(lam: Partition, degree: int) -> PoincareSeries:
    """prod_t u_2^{l_t max(2, t-1)} Q[c_2, ..., c_{2 l_t}]"""
    return _e_type_series(lam, degree, lambda t, count: count * max(2, t - 1))


def _sigma(t: int) -> int:
    return 1 if t in (1, 2) else 0


@lru_cache(maxsize=None)
def E_tilde_series(lam: Partition, degree: int) -> PoincareSeries:
    """prod_t u_2^{l_t (t - 1 + sigma(t))} Q[c_2, ..., c_{2 l_t}]"""
    return _e_type_series(lam, degree, lambda t, count: count * (t - 1 + _sigma(t)))


def _parity_strays(series: PoincareSeries, parity: int) -> List[int]:
    return [k for k, c in enumerate(series) if c and k % 2 != parity % 2]


@lru_cache(maxsize=None)
def oracle_column(j: int, base: BaseSpace, degree: int) -> PoincareSeries:
    """
    H^*(b; S_<1^j>) = t^{-j} * (sum_{mu |- j} F_mu) * base(b), with
    F = E over M_g and F = E~ over M_{g,1}.

    Raises ``NegativeDegreeError`` if the shift would drop a nonzero
    coefficient and ``ParityViolation`` if a coefficient of the wrong
    parity shows up.
    """
    if j < 0:
        raise ValueError(f"column length must be non-negative: {j}")

    base = BaseSpace(base)
    F = E_series if base is BaseSpace.MG else E_tilde_series
    top = degree + j

    total = PoincareSeries.zero(top)
    for mu in enumerate_partitions(j):
        total = total + F(mu, top)

    series = (total * base_series(base, top)).shifted(-j)

    strays = _parity_strays(series, j)
    if strays:
        raise ParityViolation(f"H^*({base}; S_<1^{j}>) has coefficients in degrees {strays}")
    return series


def lowest_degree_bound(lam: Partition) -> int:
    """Every tautological block has degree at least a third of its size."""
    return ceil(Partition(lam).size / 3)


class StableOracle(ABC):
    """Replaceable source of the stable series H^*(b; S_<lambda>)."""

    name = "abstract"
    version = ORACLE_VERSION

    @abstractmethod
    def supports(self, lam: Partition) -> bool:
        pass

    @abstractmethod
    def series(self, lam: Partition, base: BaseSpace, degree: int) -> PoincareSeries:
        pass

    def prepare(self, requests: Iterable[Tuple[Partition, BaseSpace, int]]):
        """Optional hint listing every (lambda, base, degree) about to be requested."""

    def __call__(self, lam: Partition, base: BaseSpace, degree: int) -> PoincareSeries:
        return self.series(lam, base, degree)

    def __repr__(self):
        return f"{type(self).__name__}(version={self.version})"


class ColumnOracle(StableOracle):
    name = "column"

    def supports(self, lam: Partition) -> bool:
        return Partition(lam).is_column()

    def series(self, lam: Partition, base: BaseSpace, degree: int) -> PoincareSeries:
        lam = Partition(lam)
        if not lam.is_column():
            raise UnsupportedPartition(lam, self.name)
        return oracle_column(len(lam), base, degree)


# Monomial tables
# ---------------

def _monomials(variables: int, degree: int) -> List[Tuple[int, ...]]:
    """Exponent vectors of total degree <= ``degree``, graded."""
    out = []

    def fill(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining, -1, -1):
            fill(prefix + (first,), remaining - first, slots - 1)

    for total in range(degree + 1):
        fill((), total, variables)
    return out


def _suffix_max(values: List[int]) -> List[int]:
    out = list(values)
    for q in range(len(out) - 2, -1, -1):
        out[q] = max(out[q], out[q + 1])
    return out


class _GeneratingTable:
    """
    Coefficients of prod 1 / (1 - t^{2a+s-2} x^m) in ``variables`` variables.

    ``caps[q]`` is the highest t-degree kept for monomials of x-degree q; it
    is non-increasing in q, so the kept region is closed under division by
    any factor. ``cells[j][i]`` is the coefficient of t^j x^{monomials[i]}.
    A cell with |e| > 3j is always zero and is never visited.
    """

    def __init__(self, base: BaseSpace, variables: int, caps: List[int]):
        self.base = base
        self.variables = variables
        self.caps = _suffix_max(caps)
        self.width = len(self.caps) - 1
        self.degree = self.caps[0]

        self.monomials = _monomials(variables, self.width)
        self.index = {e: i for i, e in enumerate(self.monomials)}
        self.cells = [[0] * len(self.monomials) for _ in range(self.degree + 1)]
        self.cells[0][self.index[(0,) * variables]] = 1

        # number of monomials of total degree <= q
        self._prefix = [0] * (self.width + 1)
        for e in self.monomials:
            self._prefix[sum(e)] += 1
        for q in range(1, self.width + 1):
            self._prefix[q] += self._prefix[q - 1]

        # cells of row j worth computing: x-degree <= 3j and within the caps
        self._reachable = []
        for j in range(self.degree + 1):
            top = max(q for q in range(self.width + 1) if self.caps[q] >= j)
            self._reachable.append(self._prefix[min(3 * j, top)])

        for m in self.monomials[1:]:
            self._divide_monomial(m)

    def covers(self, size: int, degree: int) -> bool:
        return size <= self.width and self.caps[size] >= degree

    def _lowest_label(self, size: int) -> int:
        if size == 1:
            return 2 if self.base is BaseSpace.MG else 1
        # size 2 with label 0 is the contraction class, which is dropped
        if size == 2:
            return 1
        return 0

    def _divide_monomial(self, m: Tuple[int, ...]):
        size = sum(m)
        a = self._lowest_label(size)
        if 2 * a + size - 2 > self.caps[size]:
            return

        shifts = []
        for i_minus in range(self._prefix[self.width - size]):
            e = tuple(x + y for x, y in zip(self.monomials[i_minus], m))
            shifts.append((self.index[e], i_minus))
        shifts.sort()

        while 2 * a + size - 2 <= self.caps[size]:
            k = 2 * a + size - 2
            for j in range(k, self.degree + 1):
                row, source = self.cells[j], self.cells[j - k]
                reachable = self._reachable[j]
                for i, i_minus in shifts:
                    if i >= reachable:
                        break
                    row[i] += source[i_minus]
            a += 1

    def coefficient(self, exponent: Tuple[int, ...], j: int) -> int:
        i = self.index.get(exponent)
        return 0 if i is None else self.cells[j][i]


def _sign(permutation: Tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(permutation))
        for k in range(i + 1, len(permutation))
        if permutation[i] > permutation[k]
    )
    return -1 if inversions % 2 else 1


class SetPartitionOracle(StableOracle):
    """
    General-partition oracle. Results agree with ``oracle_column`` on
    single columns.

    One generating table is kept per (base, number of variables) and
    reused across partitions. Call ``prepare`` with the full request list
    to build each table once at its final size.
    """

    name = "set-partition"

    def __init__(self):
        self._tables: Dict[Tuple[BaseSpace, int], _GeneratingTable] = {}
        self._results: Dict[Tuple[Partition, BaseSpace, int], PoincareSeries] = {}

    def supports(self, lam: Partition) -> bool:
        return True

    def prepare(self, requests: Iterable[Tuple[Partition, BaseSpace, int]]):
        needed: Dict[Tuple[BaseSpace, int], Dict[int, int]] = {}
        for lam, base, degree in requests:
            lam = Partition(lam)
            if not lam or lowest_degree_bound(lam) > degree:
                continue
            caps = needed.setdefault((BaseSpace(base), lam.width), {})
            caps[lam.size] = max(caps.get(lam.size, 0), degree)

        for (base, variables), caps in needed.items():
            self._table(base, variables, caps)

    def _table(self, base: BaseSpace, variables: int, caps: Dict[int, int]) -> _GeneratingTable:
        table = self._tables.get((base, variables))
        if table is not None and all(table.covers(q, d) for q, d in caps.items()):
            return table

        width = max(caps)
        merged = [caps.get(q, 0) for q in range(width + 1)]
        if table is not None:
            width = max(width, table.width)
            merged += [0] * (width + 1 - len(merged))
            for q in range(table.width + 1):
                merged[q] = max(merged[q], table.caps[q])

        table = _GeneratingTable(base, variables, merged)
        self._tables[(base, variables)] = table
        return table

    def schur_coefficients(self, lam: Partition, base: BaseSpace, degree: int) -> List[int]:
        """t-coefficients of <s_{lambda'}, prod 1 / (1 - t^{2a+s-2} x^m)> through ``degree``."""
        kappa = lam.conjugate()
        variables = len(kappa)
        table = self._table(base, variables, {lam.size: degree})

        delta = tuple(range(variables - 1, -1, -1))
        shifted = tuple(k + d for k, d in zip(kappa, delta))
        terms = []
        for w in permutations(range(variables)):
            exponent = tuple(s - delta[w[i]] for i, s in enumerate(shifted))
            if min(exponent) >= 0:
                terms.append((_sign(w), exponent))

        return [
            sum(sign * table.coefficient(exponent, j) for sign, exponent in terms)
            for j in range(degree + 1)
        ]

    def series(self, lam: Partition, base: BaseSpace, degree: int) -> PoincareSeries:
        lam, base = Partition(lam), BaseSpace(base)

        key = (lam, base, degree)
        if key in self._results:
            return self._results[key]

        if not lam:
            series = base_series(base, degree)
        elif lowest_degree_bound(lam) > degree:
            series = PoincareSeries.zero(degree)
        else:
            invariants = PoincareSeries(degree, self.schur_coefficients(lam, base, degree))
            series = invariants * base_series(base, degree)

            strays = _parity_strays(series, lam.size)
            if strays:
                warnings.warn(f"H^*({base}; S_{lam}) has coefficients in degrees {strays}")

        self._results[key] = series
        return series


_default_oracle = None


def default_oracle() -> StableOracle:
    global _default_oracle
    if _default_oracle is None:
        _default_oracle = SetPartitionOracle()
    return _default_oracle


def oracle_general(lam: Partition, base: BaseSpace, degree: int) -> PoincareSeries:
    """Stable series of H^*(b; S_<lambda>) from the default oracle."""
    return default_oracle().series(lam, base, degree)


ORACLES = {
    ColumnOracle.name: ColumnOracle,
    SetPartitionOracle.name: SetPartitionOracle,
}


def make_oracle(name: str) -> StableOracle:
    try:
        return ORACLES[name]()
    except KeyError:
        raise ValueError(f"unknown oracle: {name}") from None


__all__ = [
    "EMPTY",
    "BaseSpace",
    "ColumnOracle",
    "E_series",
    "E_tilde_series",
    "ORACLES",
    "ORACLE_VERSION",
    "SetPartitionOracle",
    "StableOracle",
    "base_series",
    "default_oracle",
    "lowest_degree_bound",
    "make_oracle",
    "oracle_column",
    "oracle_general",
]
