"""
charvar_betti.graded.py
-----------------------

Graded sums of shifted symplectic irreducibles and the coefficient systems
they assemble into.

Grading: V_g sits in degree 1, so V_g[-s] sits in degree s + 1 and its r-th
exterior power in degree r * (s + 1).

Usage
-----

    In [1]: from charvar_betti.graded import Group, coefficient_system

    In [2]: coefficient_system(Group.PGL, 2, 6).items()

    Out [2]: [(Partition(), 0, 1), (Partition(1), 3, 1), (Partition(), 6, 1), (Partition(1, 1), 6, 1)]

"""
from collections import Counter
from enum import Enum
from typing import Callable, Dict, Iterable, List, Tuple

from .errors import RankTooSmall, TruncationMismatch
from .partitions import EMPTY, Partition
from .series import PoincareSeries
from .tensor_rules import sp_tensor

Term = Tuple[Partition, int]


class Group(str, Enum):
    PGL = "PGL"
    SL = "SL"
    GL = "GL"

    @classmethod
    def from_text(cls, text: str) -> "Group":
        return cls(text.strip().upper())

    def __str__(self):
        return self.value


class GradedIrrepSum:
    """
    A finite sum of S_<lambda>[-d] with multiplicities, truncated at degree D.

    Terms are kept as ``{(lambda, d): multiplicity}``. Anything of degree
    above D is dropped on construction, so the sum is exact only through D.
    """

    def __init__(self, degree: int, terms: Dict[Term, int] = None):
        if degree < 0:
            raise ValueError(f"truncation degree must be non-negative: {degree}")

        self.degree = degree
        self.terms: Dict[Term, int] = {}
        for (lam, d), m in (terms or {}).items():
            if m and 0 <= d <= degree:
                key = (Partition(lam), d)
                self.terms[key] = self.terms.get(key, 0) + m

    @classmethod
    def unit(cls, degree: int) -> "GradedIrrepSum":
        return cls(degree, {(EMPTY, 0): 1})

    def _check(self, other: "GradedIrrepSum"):
        if other.degree != self.degree:
            raise TruncationMismatch(
                f"cannot combine graded sums truncated at {self.degree} and {other.degree}"
            )

    def __add__(self, other: "GradedIrrepSum") -> "GradedIrrepSum":
        self._check(other)
        out = Counter(self.terms)
        out.update(other.terms)
        return GradedIrrepSum(self.degree, out)

    def tensor(self, other: "GradedIrrepSum") -> "GradedIrrepSum":
        """
        Bilinear extension of S_<mu>[-d1] (x) S_<nu>[-d2] = sum N S_<lambda>[-d1-d2].

        Terms are visited in canonical order so the accumulation does not
        depend on dict ordering.
        """
        self._check(other)

        out = Counter()
        for (mu, d1), m1 in self.items_by_key():
            for (nu, d2), m2 in other.items_by_key():
                d = d1 + d2
                if d > self.degree:
                    continue
                for lam, c in sp_tensor(mu, nu).items():
                    out[(lam, d)] += m1 * m2 * c
        return GradedIrrepSum(self.degree, out)

    __mul__ = tensor

    def items_by_key(self) -> List[Tuple[Term, int]]:
        return sorted(self.terms.items(), key=lambda item: (item[0][1], item[0][0].sort_key()))

    def items(self) -> List[Tuple[Partition, int, int]]:
        """``(lambda, degree, multiplicity)`` triples, by degree then partition."""
        return [(lam, d, m) for (lam, d), m in self.items_by_key()]

    def partitions(self) -> List[Partition]:
        return sorted({lam for lam, _ in self.terms}, key=Partition.sort_key)

    def multiplicity(self, lam: Partition, d: int) -> int:
        return self.terms.get((Partition(lam), d), 0)

    def dimension_series(self, weyl_dim: Callable[[Partition, int], int], g: int) -> PoincareSeries:
        """Graded dimension at genus ``g``, given a dimension function for S_<lambda>."""
        coefficients = [0] * (self.degree + 1)
        for (lam, d), m in self.terms.items():
            coefficients[d] += m * weyl_dim(lam, g)
        return PoincareSeries(self.degree, coefficients)

    def __eq__(self, other):
        if not isinstance(other, GradedIrrepSum):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = ", ".join(f"{lam}[-{d}]x{m}" for lam, d, m in self.items())
        return f"GradedIrrepSum(D={self.degree}: {body})"


def exterior_column_decomposition(r: int) -> List[Partition]:
    """
    wedge^r V_g = S_<1^r> + S_<1^(r-2)> + ... in the stable range.

    :return: columns of the same parity as r, shortest first
    :rtype: list
    """
    if r < 0:
        raise ValueError(f"exterior power must be non-negative: {r}")
    return [Partition.column(k) for k in range(r % 2, r + 1, 2)]


def exterior_algebra_shifted(shift: int, degree: int) -> GradedIrrepSum:
    """wedge^*(V_g[-shift]), with wedge^r placed in degree r * (shift + 1)."""
    if shift < 0 or shift % 2:
        raise ValueError(f"shift must be even and non-negative: {shift}")

    terms = Counter()
    step = shift + 1
    for r in range(degree // step + 1):
        for lam in exterior_column_decomposition(r):
            terms[(lam, r * step)] += 1
    return GradedIrrepSum(degree, terms)


def _tensor_all(factors: Iterable[GradedIrrepSum], degree: int) -> GradedIrrepSum:
    out = GradedIrrepSum.unit(degree)
    for factor in factors:
        out = out.tensor(factor)
    return out


def coefficient_system(group: Group, n: int, degree: int) -> GradedIrrepSum:
    """
    wedge^*(V_g (x) W~_n) for PGL and SL, wedge^*(V_g (x) W_n) for GL.

    W~_n has one line in each degree 2, 4, ..., 2n - 2, so the PGL system is
    the tensor product of wedge^*(V_g[-2i]) for i = 1..n-1. GL adds the
    unshifted factor wedge^*(V_g).
    """
    if n < 2:
        raise RankTooSmall(n)

    group = Group(group)
    pgl = _tensor_all((exterior_algebra_shifted(2 * i, degree) for i in range(1, n)), degree)
    if group is Group.GL:
        return pgl.tensor(exterior_algebra_shifted(0, degree))
    return pgl


def sym_series(n: int, degree: int) -> PoincareSeries:
    """
    Poincare series of Sym^*(V_o (x) W~_n): V_o = Q + Q[-2] against the lines
    of W~_n gives one even generator in each degree 2i and 2i + 2.
    """
    if n < 2:
        raise RankTooSmall(n)

    generators = []
    for i in range(1, n):
        generators += [2 * i, 2 * i + 2]
    return PoincareSeries.free_generators(generators, degree)
