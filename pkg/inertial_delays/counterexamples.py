"""
End-to-end reproductions of two negative results:

- serial: two self-timed delays are each relatively inertial, but their
  serial connection admits no symmetric relative inertia window;
- union: the union of two relative inertia properties is not one itself.

Each demo checks its own expectations and raises DemoMismatchError when the
computation disagrees with them.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from inertial_delays.delays.composite import SerialDelay
from inertial_delays.delays.self_timed import SelfTimedDelay
from inertial_delays.errors import DemoMismatchError
from inertial_delays.inertia.membership import ri_member
from inertial_delays.inertia.params import RIParams, describe_window
from inertial_delays.inertia.windows import WindowDiagnosis, diagnose_window
from inertial_delays.signals.core import EdgeKind, Window, erode, from_intervals
from inertial_delays.utils.helpers import TimeLike


logger = logging.getLogger(__name__)

SERIAL_VERDICT = "no dominating RI window (forced δ=μ=0; falling edge at 4 violates)"
UNION_VERDICT = "no dominating RI window (δ−μ ≥ 2 and δ ≤ 1 contradict)"


@dataclass
class DemoResult:
    """Intermediate waveforms and the final verdict of a demo."""

    name: str
    waves: List = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    diagnosis: WindowDiagnosis = None

    def report(self) -> str:
        lines = [f"demo {self.name}"]
        lines += [f"{label} = {signal}" for label, signal in self.waves]
        lines += self.notes
        lines.append(self.diagnosis.summary())
        return "\n".join(lines) + "\n"


def _expect(condition: bool, message: str) -> None:
    if not condition:
        logger.error(f"Demo expectation failed: {message}")
        raise DemoMismatchError(message)


def serial_counterexample(bound: TimeLike = 20) -> DemoResult:
    """
    selftimed:2:0 followed by selftimed:4:0 on 1 on [0,1) [2,3) [4,inf).

    Each stage is a member of the point window property (0,0,0,0) of its own
    input, yet no symmetric window relates the chain output to the chain
    input: the rising edges at 0 and 8 force delta = mu = 0 and the falling
    edge at 4 then sees the input at 1.
    """
    u = from_intervals(0, [(0, 1), (2, 3), (4, None)])
    chain = SerialDelay([SelfTimedDelay(2, 0), SelfTimedDelay(4, 0)])
    _, x, y = chain.stages(u)

    _expect(x == from_intervals(0, [(0, 3), (5, None)]), f"first stage gave {x}")
    _expect(y == from_intervals(0, [(0, 4), (8, None)]), f"second stage gave {y}")
    point = RIParams.of(0, 0, 0, 0)
    _expect(ri_member(u, x, point).holds, "first stage leaves the point window property")
    _expect(ri_member(x, y, point).holds, "second stage leaves the point window property")

    rises = [edge.at for edge in y.edges() if edge.kind is EdgeKind.RISING]
    falls = [edge.at for edge in y.edges() if edge.kind is EdgeKind.FALLING]
    diagnosis = diagnose_window(u, rises, falls, bound)
    _expect(diagnosis.params is None, f"unexpected window {diagnosis.params}")
    _expect(diagnosis.summary() == SERIAL_VERDICT, f"unexpected verdict {diagnosis.summary()!r}")

    result = DemoResult("serial-counterexample", [("u", u), ("x", x), ("y", y)], diagnosis=diagnosis)
    result.notes.append(f"stage 1 {chain.chain[0].describe()}: RI {point} holds")
    result.notes.append(f"stage 2 {chain.chain[1].describe()}: RI {point} holds")
    return result


def union_counterexample(bound: TimeLike = 20) -> DemoResult:
    """
    Union of the window properties [t-3,t-2] and [t-1,t] for u = 1 on [0,2).

    The union permits rising edges on [1,2) and [3,4) and falling edges on
    (-inf,2) and [3,inf); a single window would need delta - mu >= 2 and
    delta <= 1 at once.
    """
    u = from_intervals(0, [(0, 2)])
    windows = [Window(3, 1), Window(1, 1)]
    allowed_rise = erode(u, windows[0]) | erode(u, windows[1])
    allowed_fall = erode(~u, windows[0]) | erode(~u, windows[1])

    _expect(allowed_rise == from_intervals(0, [(1, 2), (3, 4)]), f"rising windows gave {allowed_rise}")
    _expect(allowed_fall == from_intervals(1, [(2, 3)]), f"falling windows gave {allowed_fall}")

    diagnosis = diagnose_window(u, allowed_rise, allowed_fall, bound)
    _expect(diagnosis.params is None, f"unexpected window {diagnosis.params}")
    _expect(diagnosis.summary() == UNION_VERDICT, f"unexpected verdict {diagnosis.summary()!r}")

    result = DemoResult(
        "union-counterexample",
        [("u", u), ("allowed_rise", allowed_rise), ("allowed_fall", allowed_fall)],
        diagnosis=diagnosis,
    )
    result.notes.append(
        "union of windows " + " and ".join(describe_window(w.delta, w.mu) for w in windows)
    )
    return result


DEMOS: Dict[str, Callable[..., DemoResult]] = {
    "serial-counterexample": serial_counterexample,
    "union-counterexample": union_counterexample,
}
