"""
charvar_betti.cli.py
--------------------

This module wraps ``BettiReport``, ``verify_figure1()`` and
``write_summary_file()`` into a command-line-interface (CLI).

Usage: Betti numbers of one row
-------------------------------

    $ charvar betti --group pgl --rank 2 --max-degree 8

Usage: Check the published table
--------------------------------

    $ charvar verify-figure1

Usage: Export a workbook
------------------------

    $ charvar export my/output/folder --jobs 4

Exit codes: 0 success, 1 usage error, 2 verification mismatch,
3 oracle capability exceeded.
"""
import sys
from contextlib import contextmanager
from functools import wraps
from itertools import product

import click
import pandas as pd

from . import config, tensor_rules
from .assembler import min_valid_genus
from .cache import CoefficientCache, cache_file
from .errors import DegreeClassError, OracleCapabilityExceeded, RankTooSmall
from .figure1 import verify_figure1
from .graded import Group
from .report import FORMATS, BettiReport
from .stable_oracle import ORACLES, SetPartitionOracle
from .summarize import oracle_for, write_summary_file

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAPABILITY = 3

GROUP_CHOICE = click.Choice([g.value.lower() for g in Group], case_sensitive=False)


class CharvarGroup(click.Group):
    """Runs commands outside click's standalone mode and maps errors to exit codes."""

    def main(self, *args, **kwargs):
        standalone = kwargs.pop("standalone_mode", True)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except (RankTooSmall, DegreeClassError) as e:
            click.echo(f"Error: {e}", err=True)
            code = EXIT_USAGE
        except OracleCapabilityExceeded as e:
            click.echo(f"Error: {e}", err=True)
            code = EXIT_CAPABILITY

        if standalone:
            sys.exit(code)
        return code


@contextmanager
def coefficient_cache(cache_dir, no_cache: bool):
    """
    Install the persisted coefficient cache for the duration of a command,
    then put back whatever cache was active before.
    """
    previous = tensor_rules.active_cache()
    if no_cache:
        try:
            yield tensor_rules.use_cache(CoefficientCache())
        finally:
            tensor_rules.use_cache(previous)
        return

    path = cache_file(config.resolve_cache_dir(cache_dir))
    cache = tensor_rules.use_cache(CoefficientCache.load(path))
    try:
        yield cache
    finally:
        tensor_rules.use_cache(previous)
        try:
            cache.save()
        except OSError as e:
            click.echo(f"Could not write coefficient cache, skipping {path}: {e}", err=True)


def cache_options(func):
    """--cache-dir / --no-cache, wrapped around the command body."""

    @click.option(
        "--cache-dir",
        type=click.Path(file_okay=False),
        help="""Directory of the coefficient cache.
        Defaults to CHARVAR_CACHE_DIR, then the
        platform application directory.
        """,
    )
    @click.option("--no-cache", is_flag=True, help="Do not read or write the coefficient cache.")
    @wraps(func)
    def wrapper(*args, cache_dir=None, no_cache=False, **kwargs):
        with coefficient_cache(cache_dir, no_cache):
            return func(*args, **kwargs)

    return wrapper


oracle_option = click.option(
    "--oracle",
    "oracle_name",
    type=click.Choice(sorted(ORACLES)),
    default=SetPartitionOracle.name,
    show_default=True,
    help="Source of the stable cohomology with symplectic coefficients.",
)

jobs_option = click.option(
    "--jobs", "-j",
    type=click.IntRange(min=1),
    default=config.CHARVAR_JOBS,
    show_default=True,
    help="Number of worker processes.",
)

max_degree_option = click.option(
    "--max-degree",
    type=click.IntRange(min=0),
    default=config.CHARVAR_MAX_DEGREE,
    show_default=True,
    help="Highest cohomological degree to compute.",
)


@click.group(cls=CharvarGroup)
def main():
    """
    Stable Betti numbers of universal PGL / SL / GL character varieties.

    Compute rows, check them against the published table,
    and export them to a workbook.
    """
    pass


@main.command()
@click.option("--group", "group_name", type=GROUP_CHOICE, required=True)
@click.option("--rank", type=int, required=True, help="Rank n, at least 2.")
@click.option(
    "--degree-class",
    type=int,
    help="""Degree class d, coprime to the rank.
    Recorded in the report; the numbers do not depend on it.
    """,
)
@max_degree_option
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@oracle_option
@click.option(
    "--jobs", "-j",
    type=click.IntRange(min=1),
    default=config.CHARVAR_JOBS,
    show_default=True,
    help="""Accepted for symmetry with export and verify-figure1.
    A single row always runs in this process.
    """,
)
@cache_options
def betti(group_name, rank, degree_class, max_degree, fmt, oracle_name, jobs):
    """
    Print the stable Betti numbers of one (group, rank) row.

    The table shows even degrees only. CSV and JSON list every
    degree, odd zeros included. Worker processes only split work
    across rows, so --jobs has no effect here.
    """
    report = BettiReport.compute(
        Group.from_text(group_name),
        rank,
        max_degree,
        degree_class=degree_class,
        oracle=oracle_for(oracle_name),
    )
    click.echo(report.render(fmt), nl=False)
    return EXIT_OK


@main.command("verify-figure1")
@oracle_option
@jobs_option
@cache_options
def verify_figure1_command(oracle_name, jobs):
    """
    Recompute the published table and compare cell by cell.

    Exits 2 on any mismatch and 3 when the oracle cannot
    compute some rows. Known printed outliers are listed
    but do not fail the check.
    """
    result = verify_figure1(jobs=jobs, oracle_name=oracle_name)
    for line in result.lines():
        click.echo(line)

    if result.mismatches:
        return EXIT_MISMATCH
    if result.gaps:
        return EXIT_CAPABILITY
    return EXIT_OK


@main.command("stable-range")
@max_degree_option
def stable_range(max_degree):
    """Print the least genus for which degrees up to --max-degree are stable, per rank."""
    df = pd.DataFrame(
        {
            "n": list(range(2, 8)),
            "min_valid_genus": [min_valid_genus(n, max_degree) for n in range(2, 8)],
        }
    )
    click.echo(f"max degree {max_degree}")
    click.echo(df.to_string(index=False))
    return EXIT_OK


@main.command()
@click.argument("output_folder", required=False, default=".")
@click.option(
    "--group", "group_names",
    type=GROUP_CHOICE,
    multiple=True,
    help="""Groups to export (repeatable). Together with --rank
    this selects every (group, rank) pair. Defaults to
    PGL n=2..7, SL n=2 and GL n=2.
    """,
)
@click.option("--rank", "ranks", type=int, multiple=True, help="Ranks to export (repeatable).")
@max_degree_option
@oracle_option
@jobs_option
@cache_options
def export(output_folder, group_names, ranks, max_degree, oracle_name, jobs):
    """
    Write a ``Betti Summary <timestamp>.xlsx`` workbook
    into OUTPUT_FOLDER (default: the current folder).
    """
    requests = None
    if group_names or ranks:
        groups = [Group.from_text(g) for g in group_names] or [Group.PGL]
        requests = list(product(groups, ranks or (2,)))
        for _, rank in requests:
            if rank < 2:
                raise RankTooSmall(rank)

    write_summary_file(output_folder, requests, max_degree, jobs, oracle_name)
    return EXIT_OK


@main.group()
def cache():
    """Inspect or delete the coefficient cache."""
    pass


@cache.command()
@click.option("--cache-dir", type=click.Path(file_okay=False))
def info(cache_dir):
    """Show where the cache lives and how many records it holds."""
    path = cache_file(config.resolve_cache_dir(cache_dir))
    click.echo(f"cache file: {path}")
    if not path.is_file():
        click.echo("no cache file")
        return EXIT_OK

    for kind, count in CoefficientCache.load(path).counts().items():
        click.echo(f"{kind}: {count}")
    return EXIT_OK


@cache.command()
@click.option("--cache-dir", type=click.Path(file_okay=False))
def clear(cache_dir):
    """Delete the cache file."""
    path = cache_file(config.resolve_cache_dir(cache_dir))
    if path.is_file():
        path.unlink()
        click.echo(f"-> Deleted {path}")
    else:
        click.echo("no cache file")
    return EXIT_OK
