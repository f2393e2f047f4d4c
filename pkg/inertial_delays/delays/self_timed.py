"""
Self-timed inertial delay.

The state flips to the input's value at t exactly when the input disagrees
with it at t and the state has not moved during [t - theta, t):

    rising at t  <=>  x = 0 on [t - theta, t) and u(t) = 1
    falling at t <=>  x = 1 on [t - theta, t) and u(t) = 0
"""

from bisect import bisect_right
from fractions import Fraction
from typing import List, Optional

from inertial_delays.delays.base import DelayModel
from inertial_delays.errors import MalformedSignalError
from inertial_delays.inertia.params import RIParams
from inertial_delays.signals.core import Signal, check_bit
from inertial_delays.utils.helpers import TimeLike, as_time, format_time


def _first_at_or_after(u: Signal, t: Fraction, value: int) -> Optional[Fraction]:
    """Earliest instant >= t where u equals value."""
    if u.eval(t) == value:
        return t
    index = bisect_right(u.transitions, t)
    return u.transitions[index] if index < len(u.transitions) else None


class SelfTimedDelay(DelayModel):
    """
    Event-driven solver of the self-timed delay equations.

    The state starts at x_init. Each output edge consumes either an input edge
    or the expiry of the theta hold-off after the previous output edge, so the
    forward scan terminates on finite signals and its result is the unique
    solution for the given starting value.
    """

    def __init__(self, theta: TimeLike, x_init: int = 0):
        """
        Initialize the self-timed delay.

        Args:
            theta: Hold-off window length, theta > 0
            x_init: State value before the first output edge
        """
        super().__init__()
        self.theta = as_time(theta)
        if self.theta <= 0:
            raise MalformedSignalError(f"self-timed window must be positive, got {format_time(self.theta)}")
        self.x_init = check_bit(x_init)

    def apply(self, u: Signal) -> Signal:
        value = self.x_init
        times: List[Fraction] = []

        if value != u.initial:
            if u.is_constant:
                self.logger.warning(f"state {value} never matches the constant input; output follows the input")
                return Signal.constant(u.initial)
            # The disagreement goes back to -inf; settle it theta before the input first moves.
            settle = u.transitions[0] - self.theta
            self.logger.warning(f"initial state {value} differs from the input; flipping at {format_time(settle)}")
            times.append(settle)
            value ^= 1
        elif not u.is_constant:
            times.append(u.transitions[0])
            value ^= 1

        while times:
            hold_until = times[-1] + self.theta
            nxt = _first_at_or_after(u, hold_until, 1 - value)
            if nxt is None:
                break
            times.append(nxt)
            value ^= 1

        result = Signal(self.x_init, tuple(times))
        self.logger.debug(f"{self.describe()} on {u} -> {result}")
        return result

    def ri_envelope(self) -> Optional[RIParams]:
        # x(t) == u(t) at every output edge: a point window at t itself.
        return RIParams.of(0, 0, 0, 0)

    def describe(self) -> str:
        return f"selftimed:{format_time(self.theta)}:{self.x_init}"
