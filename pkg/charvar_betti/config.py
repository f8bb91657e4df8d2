"""
charvar_betti.config.py
-----------------------

Settings read from the environment (or a ``.env`` file found by
python-dotenv):

    CHARVAR_CACHE_DIR   directory of the coefficient cache
    CHARVAR_JOBS        default number of worker processes
    CHARVAR_MAX_DEGREE  default truncation degree

"""
import os
from pathlib import Path
from typing import Optional, Union

import click
from dotenv import find_dotenv, load_dotenv

load_dotenv(find_dotenv())

APP_NAME = "charvar-betti"

CHARVAR_CACHE_DIR = os.getenv("CHARVAR_CACHE_DIR")
CHARVAR_JOBS = int(os.getenv("CHARVAR_JOBS", "1"))
CHARVAR_MAX_DEGREE = int(os.getenv("CHARVAR_MAX_DEGREE", "20"))


def resolve_cache_dir(flag_value: Optional[Union[Path, str]] = None) -> Path:
    """``--cache-dir`` beats ``CHARVAR_CACHE_DIR`` beats the platform app dir."""
    if flag_value:
        return Path(flag_value)

    env_value = os.getenv("CHARVAR_CACHE_DIR", CHARVAR_CACHE_DIR)
    if env_value:
        return Path(env_value)

    return Path(click.get_app_dir(APP_NAME))
