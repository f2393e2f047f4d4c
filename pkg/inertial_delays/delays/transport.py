"""
Pure transport delay.
"""

from typing import Optional

from inertial_delays.delays.base import DelayModel
from inertial_delays.errors import MalformedSignalError
from inertial_delays.inertia.params import RIParams
from inertial_delays.signals.core import Signal
from inertial_delays.utils.helpers import TimeLike, as_time, format_time


class TransportDelay(DelayModel):
    """
    Shift the input by a fixed non-negative amount: x(t) = u(t - d).

    Every output edge at t copies an input edge at t - d, hence the point
    window envelope (0, d, 0, d).
    """

    def __init__(self, d: TimeLike):
        """
        Initialize the transport delay.

        Args:
            d: Delay amount, d >= 0
        """
        super().__init__()
        self.d = as_time(d)
        if self.d < 0:
            raise MalformedSignalError(f"transport delay must be non-negative, got {format_time(self.d)}")

    def apply(self, u: Signal) -> Signal:
        return u.translate(self.d)

    def ri_envelope(self) -> Optional[RIParams]:
        return RIParams.of(0, self.d, 0, self.d)

    def describe(self) -> str:
        return f"transport:{format_time(self.d)}"
