"""
Serial connection and duality wrappers.
"""

from typing import Optional, Sequence

from inertial_delays.delays.base import DelayModel
from inertial_delays.errors import MalformedSignalError
from inertial_delays.inertia.params import RIParams, dual_ri
from inertial_delays.signals.core import Signal


class SerialDelay(DelayModel):
    """
    Chain of models applied left to right: the state of one stage is the
    input of the next.

    The chain of two relatively inertial delays need not be relatively
    inertial, so no envelope is claimed.
    """

    def __init__(self, chain: Sequence[DelayModel]):
        """
        Initialize the serial connection.

        Args:
            chain: Non-empty list of stages, first stage first
        """
        super().__init__()
        if not chain:
            raise MalformedSignalError("serial chain must not be empty")
        self.chain = tuple(chain)

    def apply(self, u: Signal) -> Signal:
        signal = u
        for stage in self.chain:
            signal = stage.apply(signal)
        return signal

    def stages(self, u: Signal) -> list:
        """Every intermediate signal, the input included."""
        signals = [u]
        for stage in self.chain:
            signals.append(stage.apply(signals[-1]))
        return signals

    def ri_envelope(self) -> Optional[RIParams]:
        return None

    def describe(self) -> str:
        return f"serial({','.join(stage.describe() for stage in self.chain)})"


class DualDelay(DelayModel):
    """The dual system: complement the input, apply the inner model, complement the result."""

    def __init__(self, inner: DelayModel):
        super().__init__()
        self.inner = inner

    def apply(self, u: Signal) -> Signal:
        return ~self.inner.apply(~u)

    def ri_envelope(self) -> Optional[RIParams]:
        inner = self.inner.ri_envelope()
        return None if inner is None else dual_ri(inner)

    def describe(self) -> str:
        return f"dual({self.inner.describe()})"
