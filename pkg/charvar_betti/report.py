"""
charvar_betti.report.py
-----------------------

This module defines the ``BettiReport`` class.
See class docstring for more info.

Usage
-----

    In [1]: from charvar_betti import BettiReport

    In [2]: report = BettiReport.compute("SL", 2, 4, degree_class=1)

    In [3]: report.meta

    Out [3]: {'group': 'SL',
              'rank': 2,
              'degree_class': 1,
              'max_degree': 4,
              'betti': ['1', '0', '3', '0', '9'],
              'min_valid_genus': 7,
              'oracle_version': 'set-partition/1'}

    In [4]: print(report.to_csv())

    Out [4]: degree,betti
             0,1
             1,0
             2,3
             3,0
             4,9

"""
import json
from math import gcd
from typing import List, Optional

import pandas as pd

from .assembler import betti_series, min_valid_genus
from .errors import DegreeClassError, RankTooSmall
from .graded import Group
from .stable_oracle import StableOracle, default_oracle

FORMATS = ("table", "csv", "json")


class BettiReport:
    """
    The stable Betti numbers of one (group, rank) pair through a maximum
    degree, plus the genus from which they are valid.

    Functionality
    -------------
        - ``compute`` validates rank and degree class, then runs the assembler
        - ``meta`` is the machine-readable record (JSON keys)
        - ``df_betti`` holds every degree, ``df_even`` the even ones
        - ``render`` produces the table, CSV or JSON text
    """

    def __init__(
        self,
        group: Group,
        rank: int,
        max_degree: int,
        betti: List[int],
        degree_class: Optional[int] = None,
        oracle_version: str = "",
    ):
        self.group = Group(group)
        self.rank = rank
        self.max_degree = max_degree
        self.betti = [int(b) for b in betti]
        self.degree_class = degree_class
        self.oracle_version = oracle_version
        self.min_valid_genus = min_valid_genus(rank, max_degree)

    @classmethod
    def compute(
        cls,
        group: Group,
        rank: int,
        max_degree: int,
        degree_class: Optional[int] = None,
        oracle: StableOracle = None,
    ) -> "BettiReport":
        """
        :param degree_class: the component label d, which must be coprime to the rank.
                             It does not change the numbers.
        :type degree_class: int, optional
        """
        if rank < 2:
            raise RankTooSmall(rank)
        if degree_class is not None and gcd(degree_class, rank) != 1:
            raise DegreeClassError(degree_class, rank)

        oracle = oracle or default_oracle()
        series = betti_series(group, rank, max_degree, oracle=oracle)

        return cls(
            group,
            rank,
            max_degree,
            series.coefficients,
            degree_class=degree_class,
            oracle_version=f"{oracle.name}/{oracle.version}",
        )

    @property
    def label(self) -> str:
        label = f"{self.group} n={self.rank}"
        if self.degree_class is not None:
            label += f" d={self.degree_class}"
        return label

    @property
    def meta(self) -> dict:
        return {
            "group": str(self.group),
            "rank": self.rank,
            "degree_class": self.degree_class,
            "max_degree": self.max_degree,
            "betti": [str(b) for b in self.betti],
            "min_valid_genus": self.min_valid_genus,
            "oracle_version": self.oracle_version,
        }

    @property
    def df_betti(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"degree": range(self.max_degree + 1), "betti": self.betti}
        )

    @property
    def df_even(self) -> pd.DataFrame:
        df = self.df_betti
        return df[df["degree"] % 2 == 0].reset_index(drop=True)

    # Renderings
    # ----------

    def to_json(self) -> str:
        return json.dumps(self.meta)

    def to_csv(self) -> str:
        return self.df_betti.to_csv(index=False, lineterminator="\n")

    def to_table(self) -> str:
        lines = [
            f"{self.label}: stable Betti numbers through degree {self.max_degree}",
            self.df_even.to_string(index=False),
            f"min valid genus: {self.min_valid_genus}",
        ]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "table") -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "table":
            return self.to_table()
        raise ValueError(f"unknown format: {fmt}")

    def __repr__(self):
        return f"BettiReport({self.label}, D={self.max_degree})"
