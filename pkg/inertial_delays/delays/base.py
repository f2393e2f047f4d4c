"""
Base class for deterministic delay models.
"""

import logging
from abc import ABC, abstractmethod
from typing import Optional

from inertial_delays.inertia.params import RIParams
from inertial_delays.signals.core import Signal


logger = logging.getLogger(__name__)


class DelayModel(ABC):
    """
    Base class for all delay models.

    A delay model is a deterministic transducer: one state signal per input.
    Models are immutable descriptions; apply is pure.
    """

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def apply(self, u: Signal) -> Signal:
        """
        Compute the state signal for an input.

        Args:
            u: Input signal

        Returns:
            State signal
        """
        pass

    @abstractmethod
    def ri_envelope(self) -> Optional[RIParams]:
        """
        Relative inertia parameters every output of the model satisfies.

        Returns:
            Statically known params, or None when no general envelope exists
        """
        pass

    @abstractmethod
    def describe(self) -> str:
        """
        Model description in the --model grammar.

        Returns:
            Text such as "transport:3" or "serial(selftimed:2:0,selftimed:4:0)"
        """
        pass

    def __call__(self, u: Signal) -> Signal:
        return self.apply(u)

    def __eq__(self, other) -> bool:
        return isinstance(other, DelayModel) and self.describe() == other.describe()

    def __hash__(self) -> int:
        return hash(self.describe())

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.describe()!r})"
