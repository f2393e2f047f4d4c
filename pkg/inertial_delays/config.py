"""
Runtime settings read from the environment (and an optional .env file).
"""

import logging
import os
from fractions import Fraction
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, field_validator

from inertial_delays.utils.helpers import parse_time


logger = logging.getLogger(__name__)

_TRUTHY = {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """
    Process wide settings.

    Attributes:
        log_level: Name of the logging level used by the CLI
        search_bound: Default cap on window searches (fit --bound)
        show_progress: Whether corpus work shows tqdm progress bars
        vcd_timescale: Timescale written into exported VCD files
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    log_level: str = "WARNING"
    search_bound: Fraction = Fraction(20)
    show_progress: bool = False
    vcd_timescale: str = "1 ns"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @field_validator("search_bound", mode="before")
    @classmethod
    def _exact_bound(cls, value) -> Fraction:
        bound = parse_time(value) if isinstance(value, str) else Fraction(value)
        if bound <= 0:
            raise ValueError("search bound must be positive")
        return bound


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    Build Settings from INERTIA_* environment variables.

    Args:
        env_file: Optional path of a dotenv file; the default lookup of
            python-dotenv is used when omitted

    Returns:
        Validated settings
    """
    if env_file:
        load_dotenv(env_file)
    else:
        load_dotenv()

    values = {}
    if os.getenv("INERTIA_LOG_LEVEL"):
        values["log_level"] = os.getenv("INERTIA_LOG_LEVEL")
    if os.getenv("INERTIA_SEARCH_BOUND"):
        values["search_bound"] = os.getenv("INERTIA_SEARCH_BOUND")
    if os.getenv("INERTIA_PROGRESS"):
        values["show_progress"] = os.getenv("INERTIA_PROGRESS").strip().lower() in _TRUTHY
    if os.getenv("INERTIA_VCD_TIMESCALE"):
        values["vcd_timescale"] = os.getenv("INERTIA_VCD_TIMESCALE")

    settings = Settings(**values)
    logger.debug(f"Loaded settings: {settings}")
    return settings
