"""
Parameters of the relative and absolute inertia properties and the
arithmetic that relates them (order, duality, RI to AI map, Zeno-freeness).
"""

import logging
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from inertial_delays.signals.core import Window
from inertial_delays.utils.helpers import as_time, format_time, parse_time_list


logger = logging.getLogger(__name__)


class RIParams(BaseModel):
    """
    Relative inertia parameters (mu_r, delta_r, mu_f, delta_f).

    A rising edge of the state at t needs the input at 1 on
    [t - delta_r, t - delta_r + mu_r]; a falling edge needs it at 0 on
    [t - delta_f, t - delta_f + mu_f].
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mu_r: Fraction
    delta_r: Fraction
    mu_f: Fraction
    delta_f: Fraction

    @field_validator("*", mode="before")
    @classmethod
    def _exact(cls, value) -> Fraction:
        return as_time(value)

    @model_validator(mode="after")
    def _ordered(self) -> "RIParams":
        if not (0 <= self.mu_r <= self.delta_r and 0 <= self.mu_f <= self.delta_f):
            raise ValueError(f"need 0 <= mu_r <= delta_r and 0 <= mu_f <= delta_f, got {self}")
        return self

    @classmethod
    def of(cls, mu_r, delta_r, mu_f, delta_f) -> "RIParams":
        """Positional constructor in the usual (mu_r, delta_r, mu_f, delta_f) order."""
        return cls(mu_r=mu_r, delta_r=delta_r, mu_f=mu_f, delta_f=delta_f)

    @classmethod
    def symmetric(cls, mu, delta) -> "RIParams":
        return cls.of(mu, delta, mu, delta)

    @classmethod
    def parse(cls, text: str) -> "RIParams":
        """Parse "mu_r,delta_r,mu_f,delta_f" (decimals or p/q)."""
        values = parse_time_list(text)
        if len(values) != 4:
            raise ValueError(f"expected four comma separated values, got {text!r}")
        return cls.of(*values)

    @property
    def rise_window(self) -> Window:
        return Window(self.delta_r, self.mu_r)

    @property
    def fall_window(self) -> Window:
        return Window(self.delta_f, self.mu_f)

    def __str__(self) -> str:
        return ",".join(format_time(v) for v in (self.mu_r, self.delta_r, self.mu_f, self.delta_f))


class AIParams(BaseModel):
    """Absolute inertia parameters: minimum dwell after rising (d_r) and falling (d_f) edges."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d_r: Fraction
    d_f: Fraction

    @field_validator("*", mode="before")
    @classmethod
    def _exact(cls, value) -> Fraction:
        return as_time(value)

    @model_validator(mode="after")
    def _non_negative(self) -> "AIParams":
        if self.d_r < 0 or self.d_f < 0:
            raise ValueError(f"absolute inertia parameters must be non-negative, got {self}")
        return self

    @classmethod
    def of(cls, d_r, d_f) -> "AIParams":
        return cls(d_r=d_r, d_f=d_f)

    @classmethod
    def parse(cls, text: str) -> "AIParams":
        values = parse_time_list(text)
        if len(values) != 2:
            raise ValueError(f"expected two comma separated values, got {text!r}")
        return cls.of(*values)

    def __str__(self) -> str:
        return f"{format_time(self.d_r)},{format_time(self.d_f)}"


def ri_subset(p: RIParams, q: RIParams) -> bool:
    """
    Order of the properties: f_RI^p is contained in f_RI^q.

    Holds exactly when each window of p covers the corresponding window of q.
    """
    return p.rise_window.contains(q.rise_window) and p.fall_window.contains(q.fall_window)


def dual_ri(p: RIParams) -> RIParams:
    """Parameters of the dual property: rise and fall pairs swapped."""
    return RIParams.of(p.mu_f, p.delta_f, p.mu_r, p.delta_r)


def ri_to_ai(p: RIParams) -> Optional[AIParams]:
    """
    Absolute inertia implied by relative inertia.

    Returns:
        (delta_f - delta_r + mu_r, delta_r - delta_f + mu_f) when
        delta_f >= delta_r - mu_r and delta_r >= delta_f - mu_f, otherwise None
    """
    if p.delta_f >= p.delta_r - p.mu_r and p.delta_r >= p.delta_f - p.mu_f:
        return AIParams.of(p.delta_f - p.delta_r + p.mu_r, p.delta_r - p.delta_f + p.mu_f)
    return None


def ri_zeno_free(p: RIParams) -> bool:
    """Not Zeno iff delta_f > delta_r - mu_r and delta_r > delta_f - mu_f (both strict)."""
    return p.delta_f > p.delta_r - p.mu_r and p.delta_r > p.delta_f - p.mu_f


def intersection_envelope(p: RIParams, q: RIParams) -> RIParams:
    """
    A property containing f_RI^p intersected with f_RI^q.

    Either operand contains the intersection; the narrower of the two (in the
    subset order) is returned when they are comparable, p otherwise.
    """
    if ri_subset(q, p):
        return q
    return p


def describe_window(delta: Fraction, mu: Fraction) -> str:
    """The window as text, e.g. "[t-3,t-2]"."""

    def offset(v: Fraction) -> str:
        if v == 0:
            return "t"
        return f"t-{format_time(v)}" if v > 0 else f"t+{format_time(-v)}"

    return f"[{offset(delta)},{offset(delta - mu)}]"
