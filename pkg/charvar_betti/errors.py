"""
charvar_betti.errors.py
-----------------------

Exceptions raised by the package. The CLI maps them to exit codes.
"""


class CharvarError(Exception):
    """Base class for every error raised by ``charvar_betti``."""


class TruncationMismatch(CharvarError, ValueError):
    """Two truncated objects with different truncation degrees were combined."""


class RankTooSmall(CharvarError, ValueError):
    def __init__(self, rank: int):
        super().__init__(f"rank too small: n={rank}, need n >= 2")
        self.rank = rank


class DegreeClassError(CharvarError, ValueError):
    def __init__(self, degree_class: int, rank: int):
        super().__init__(
            f"degree class must be coprime to rank (d={degree_class}, n={rank})"
        )
        self.degree_class = degree_class
        self.rank = rank


class NegativeDegreeError(CharvarError, ArithmeticError):
    """A degree shift would push a nonzero coefficient below degree 0."""


class ParityViolation(CharvarError, ArithmeticError):
    """A series that must live in a single parity has a stray coefficient."""


class UnsupportedPartition(CharvarError, ValueError):
    def __init__(self, partition, oracle_name: str):
        super().__init__(
            f"unsupported partition shape {partition} for oracle '{oracle_name}'"
        )
        self.partition = partition
        self.oracle_name = oracle_name


class OracleCapabilityExceeded(CharvarError, RuntimeError):
    def __init__(self, partitions, oracle_name: str):
        self.partitions = tuple(partitions)
        self.oracle_name = oracle_name
        listing = ", ".join(str(p) for p in self.partitions)
        super().__init__(
            f"oracle capability exceeded ({oracle_name}): no stable series for {listing}"
        )
