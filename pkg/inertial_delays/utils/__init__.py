"""
Utility functions and helpers.
"""

from inertial_delays.utils.helpers import (
    as_time,
    parse_time,
    format_time,
    parse_time_list,
    denominator_lcm,
)

__all__ = [
    "as_time",
    "parse_time",
    "format_time",
    "parse_time_list",
    "denominator_lcm",
]
