"""
Helper utility functions.
"""

import math
import re
from fractions import Fraction
from typing import Iterable, List, Optional, Union

TimeLike = Union[int, Fraction, str]

_TIME_RE = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?$')


def as_time(value: TimeLike) -> Fraction:
    """
    Convert an integer, Fraction or textual time to an exact Fraction.

    Args:
        value: Time value; text may be decimal ("0.5") or rational ("1/2")

    Returns:
        Exact rational time

    Raises:
        TypeError: For floats, bools and other non-exact types
        ValueError: For malformed text
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"times must be exact rationals, got {type(value).__name__}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_time(value)
    raise TypeError(f"cannot interpret {value!r} as a time")


def parse_time(text: str) -> Fraction:
    """
    Parse a decimal or rational time literal.

    Args:
        text: Literal such as "3", "-1/2" or "0.25"

    Returns:
        Exact rational time
    """
    cleaned = text.strip()
    if not _TIME_RE.match(cleaned):
        raise ValueError(f"malformed time {text!r}")
    if "/" in cleaned:
        numerator, denominator = cleaned.split("/")
        if "." in numerator:
            raise ValueError(f"malformed time {text!r}")
        if int(denominator) == 0:
            raise ValueError(f"zero denominator in {text!r}")
    return Fraction(cleaned)


def format_time(t: Optional[Fraction], unbounded: str = "inf") -> str:
    """
    Format a time in canonical rational form.

    Args:
        t: Time value, None standing for +infinity
        unbounded: Text used for None

    Returns:
        "p" for integers, "p/q" otherwise
    """
    if t is None:
        return unbounded
    if t.denominator == 1:
        return str(t.numerator)
    return f"{t.numerator}/{t.denominator}"


def parse_time_list(text: str) -> List[Fraction]:
    """
    Parse a comma separated list of times.

    Args:
        text: Text such as "0,1/2,3"

    Returns:
        List of exact times (empty for blank text)
    """
    return [parse_time(part) for part in text.split(",") if part.strip()]


def denominator_lcm(times: Iterable[Fraction]) -> int:
    """
    Least common multiple of the denominators of the given times.

    Args:
        times: Exact times

    Returns:
        Smallest integer scale turning every time into an integer (1 if empty)
    """
    scale = 1
    for t in times:
        scale = scale * t.denominator // math.gcd(scale, t.denominator)
    return scale
