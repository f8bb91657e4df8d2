"""
charvar_betti.series.py
-----------------------

This module defines ``PoincareSeries``, a formal power series in one
variable t, truncated at a fixed degree D, with exact integer
coefficients. All dimension counting in the package flows through it.

Usage
-----

    In [1]: from charvar_betti.series import PoincareSeries

    In [2]: partitions = PoincareSeries.one(8)

    In [3]: for i in range(1, 5):
       ...:     partitions = partitions.divide_by_one_minus(2 * i)

    In [4]: partitions.coefficients

    Out [4]: [1, 0, 1, 0, 2, 0, 3, 0, 5]

"""
from typing import Iterable, List

from .errors import NegativeDegreeError, TruncationMismatch


class PoincareSeries:
    """
    Sum_{k <= D} c_k t^k with arbitrary-precision integer coefficients.

    Every operation is exact and keeps the truncation degree D. Combining
    two series with different D raises ``TruncationMismatch``.
    """

    __slots__ = ("degree", "coefficients")

    def __init__(self, degree: int, coefficients: Iterable[int] = ()):
        if degree < 0:
            raise ValueError(f"truncation degree must be non-negative: {degree}")

        coefficients = [int(c) for c in coefficients][: degree + 1]
        coefficients += [0] * (degree + 1 - len(coefficients))

        self.degree = degree
        self.coefficients: List[int] = coefficients

    # Constructors
    # ------------

    @classmethod
    def zero(cls, degree: int) -> "PoincareSeries":
        return cls(degree)

    @classmethod
    def one(cls, degree: int) -> "PoincareSeries":
        return cls(degree, [1])

    @classmethod
    def monomial(cls, exponent: int, degree: int, coefficient: int = 1) -> "PoincareSeries":
        series = cls(degree)
        if 0 <= exponent <= degree:
            series.coefficients[exponent] = coefficient
        return series

    @classmethod
    def free_generators(cls, generator_degrees: Iterable[int], degree: int) -> "PoincareSeries":
        """Poincare series of a free graded-commutative algebra on even generators."""
        series = cls.one(degree)
        for k in generator_degrees:
            series = series.divide_by_one_minus(k)
        return series

    # Arithmetic
    # ----------

    def _check(self, other: "PoincareSeries"):
        if not isinstance(other, PoincareSeries):
            return NotImplemented
        if other.degree != self.degree:
            raise TruncationMismatch(
                f"cannot combine series truncated at {self.degree} and {other.degree}"
            )
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PoincareSeries(
            self.degree, [a + b for a, b in zip(self.coefficients, other.coefficients)]
        )

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PoincareSeries(
            self.degree, [a - b for a, b in zip(self.coefficients, other.coefficients)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return PoincareSeries(self.degree, [other * c for c in self.coefficients])
        if self._check(other) is NotImplemented:
            return NotImplemented

        D = self.degree
        a = self.coefficients
        b = other.coefficients
        out = [0] * (D + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(D + 1 - i):
                    out[i + j] += ai * b[j]
        return PoincareSeries(D, out)

    __rmul__ = __mul__

    def divide_by_one_minus(self, k: int, multiplicity: int = 1) -> "PoincareSeries":
        """
        Multiply by the geometric series (1 - t^k)^(-multiplicity).

        :param k: positive exponent
        :type k: int
        """
        if k <= 0:
            raise ValueError(f"geometric-series inverse needs a positive exponent: {k}")

        out = list(self.coefficients)
        for _ in range(multiplicity):
            for i in range(k, self.degree + 1):
                out[i] += out[i - k]
        return PoincareSeries(self.degree, out)

    def shifted(self, k: int) -> "PoincareSeries":
        """
        Multiply by t^k. The truncation degree moves with the shift, so
        ``s.shifted(d)`` of a series truncated at D - d is truncated at D.

        A negative shift requires the dropped low coefficients to vanish.
        """
        if k >= 0:
            return PoincareSeries(self.degree + k, [0] * k + self.coefficients)

        dropped = self.coefficients[:-k]
        if any(dropped):
            raise NegativeDegreeError(
                f"shift by t^{k} would leave nonzero coefficients in negative degree: {dropped}"
            )
        if self.degree + k < 0:
            raise NegativeDegreeError(f"shift by t^{k} exceeds truncation degree {self.degree}")
        return PoincareSeries(self.degree + k, self.coefficients[-k:])

    def truncated(self, degree: int) -> "PoincareSeries":
        if degree > self.degree:
            raise TruncationMismatch(
                f"cannot extend a series truncated at {self.degree} to {degree}"
            )
        return PoincareSeries(degree, self.coefficients[: degree + 1])

    # Inspection
    # ----------

    def __getitem__(self, k):
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return self.degree + 1

    def __eq__(self, other):
        if isinstance(other, PoincareSeries):
            return self.degree == other.degree and self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == list(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, tuple(self.coefficients)))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def odd_degrees(self) -> List[int]:
        """Degrees of the odd nonzero coefficients."""
        return [k for k in range(1, self.degree + 1, 2) if self.coefficients[k]]

    def even_coefficients(self) -> List[int]:
        return self.coefficients[::2]

    def __repr__(self):
        terms = [
            f"{c}t^{k}" if k else str(c) for k, c in enumerate(self.coefficients) if c
        ]
        body = " + ".join(terms) if terms else "0"
        return f"PoincareSeries({body} + O(t^{self.degree + 1}))"
