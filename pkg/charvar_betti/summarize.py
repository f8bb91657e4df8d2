"""
charvar_betti.summarize.py
--------------------------

This module runs many (group, rank) computations at once with
``compute_series()``, optionally in worker processes, and writes them to
a workbook with ``write_summary_file()``.

Usage
-----

    In [1]: from charvar_betti import write_summary_file

    In [2]: write_summary_file('my/output/folder', [("PGL", 2), ("SL", 2)], 20)

    Out [2]:
        Computing PGL n=2
        Computing SL n=2

        -> Wrote Betti summary to my/output/folder/Betti Summary 2026-10-17 21-22-49.xlsx
        -> Runtime: 0:00:01.622940

"""
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd

from . import tensor_rules
from .assembler import betti_series
from .cache import CoefficientCache
from .errors import OracleCapabilityExceeded
from .graded import Group
from .report import BettiReport
from .stable_oracle import SetPartitionOracle, StableOracle, default_oracle, make_oracle

Request = Tuple[Group, int]

DEFAULT_EXPORT = [(Group.PGL, n) for n in range(2, 8)] + [(Group.SL, 2), (Group.GL, 2)]


class Outcome:
    """Result of one (group, rank) request: coefficients or the partitions the oracle lacked."""

    def __init__(self, group: Group, rank: int, coefficients=None, unsupported=None):
        self.group = Group(group)
        self.rank = rank
        self.coefficients: Optional[List[int]] = coefficients
        self.unsupported: Tuple = tuple(unsupported or ())

    @property
    def ok(self) -> bool:
        return self.coefficients is not None


_oracles: Dict[str, StableOracle] = {}


def oracle_for(name: str) -> StableOracle:
    """One oracle instance per name and process, so memo tables are shared."""
    if name == SetPartitionOracle.name:
        return default_oracle()
    if name not in _oracles:
        _oracles[name] = make_oracle(name)
    return _oracles[name]


def _compute_one(group: Group, rank: int, degree: int, oracle_name: str) -> Outcome:
    try:
        series = betti_series(group, rank, degree, oracle=oracle_for(oracle_name))
    except OracleCapabilityExceeded as e:
        return Outcome(group, rank, unsupported=e.partitions)
    return Outcome(group, rank, coefficients=series.coefficients)


def _init_worker(cache_path: Optional[str]):
    cache = CoefficientCache.load(cache_path) if cache_path else CoefficientCache()
    tensor_rules.use_cache(cache)
    # records inherited from the parent are not news
    cache.drain_fresh()


def _worker(group: Group, rank: int, degree: int, oracle_name: str):
    outcome = _compute_one(group, rank, degree, oracle_name)
    return outcome, tensor_rules.active_cache().drain_fresh()


def compute_series(
    requests: List[Request],
    degree: int,
    jobs: int = 1,
    oracle_name: str = SetPartitionOracle.name,
) -> List[Outcome]:
    """
    Compute every request, in request order.

    With ``jobs > 1`` the requests run in a process pool. Each worker hands
    back the coefficient records it created and they are merged into the
    active cache.
    """
    if jobs <= 1 or len(requests) <= 1:
        return [_compute_one(group, rank, degree, oracle_name) for group, rank in requests]

    cache = tensor_rules.active_cache()
    cache_path = str(cache.path) if cache.path and cache.path.is_file() else None

    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_init_worker, initargs=(cache_path,)
    ) as pool:
        futures = [
            pool.submit(_worker, group, rank, degree, oracle_name) for group, rank in requests
        ]
        results = [future.result() for future in futures]

    outcomes = []
    for outcome, records in results:
        cache.merge(records.items())
        outcomes.append(outcome)
    return outcomes


def compute_reports(
    requests: List[Request],
    degree: int,
    jobs: int = 1,
    oracle_name: str = SetPartitionOracle.name,
) -> List[BettiReport]:
    """Like ``compute_series`` but a capability gap raises."""
    oracle = oracle_for(oracle_name)
    reports = []
    for outcome in compute_series(requests, degree, jobs, oracle_name):
        if not outcome.ok:
            raise OracleCapabilityExceeded(outcome.unsupported, oracle.name)
        reports.append(
            BettiReport(
                outcome.group,
                outcome.rank,
                degree,
                outcome.coefficients,
                oracle_version=f"{oracle.name}/{oracle.version}",
            )
        )
    return reports


def write_summary_file(
    output_folder: Union[Path, str],
    requests: List[Request] = None,
    degree: int = 20,
    jobs: int = 1,
    oracle_name: str = SetPartitionOracle.name,
) -> Path:
    """
    Create a new ``.xlsx`` summary file.

    This file has one ``Summary`` tab with a row per (group, rank) and a
    column per even degree, plus one tab per row listing every degree.

    :param output_folder: folder where the ``.xlsx`` file will be stored
    :type output_folder: Path
    :param requests: (group, rank) pairs; defaults to ``DEFAULT_EXPORT``
    :type requests: list, optional
    :param degree: truncation degree
    :type degree: int
    :param jobs: number of worker processes
    :type jobs: int
    :return: filepath of the new summary file
    :rtype: Path
    """
    start_time = datetime.now()

    requests = [(Group(group), rank) for group, rank in (requests or DEFAULT_EXPORT)]
    output_folder = Path(output_folder)
    output_folder.mkdir(parents=True, exist_ok=True)

    now_txt = start_time.strftime("%Y-%m-%d %H-%M-%S")
    output_xlsx_filepath = output_folder / ("Betti Summary " + now_txt + ".xlsx")

    for group, rank in requests:
        print(f"Computing {group} n={rank}")

    reports = compute_reports(requests, degree, jobs, oracle_name)

    summary_rows = []
    for report in reports:
        row = {"group": str(report.group), "rank": report.rank}
        for k, b in zip(report.df_even["degree"], report.df_even["betti"]):
            row[f"b{k}"] = b
        row["min_valid_genus"] = report.min_valid_genus
        summary_rows.append(row)
    df_summary = pd.DataFrame(summary_rows)

    # Write Summary and per-row tabs out to file
    writer = pd.ExcelWriter(output_xlsx_filepath, engine="xlsxwriter")

    workbook = writer.book
    header_format = workbook.add_format({"bold": True, "font_size": 14})

    df_summary.to_excel(writer, sheet_name="Summary", index=False)
    writer.sheets["Summary"].set_column(0, len(df_summary.columns), 10)

    for report in reports:
        sheet_name = f"{report.group} n={report.rank}"
        kwargs = {"sheet_name": sheet_name, "startrow": 1, "startcol": 0}

        report.df_betti.to_excel(writer, index=False, **kwargs)

        worksheet = writer.sheets[sheet_name]
        worksheet.write(0, 0, f"{report.label} (valid for g >= {report.min_valid_genus})", header_format)
        worksheet.set_column(0, 1, 12)

    writer.close()
    print(f"\n-> Wrote Betti summary to {output_xlsx_filepath}")

    end_time = datetime.now()

    runtime = end_time - start_time
    print(f"-> Runtime: {runtime}")

    return output_xlsx_filepath
