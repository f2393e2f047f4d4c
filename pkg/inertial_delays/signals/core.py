"""
Exact binary signals and their primitive operators.

A signal is an eventually constant, right-continuous step function of real
time with values in {0, 1}. It is stored as the value it has before its first
transition plus the strictly increasing list of instants where it flips.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from inertial_delays.errors import MalformedSignalError
from inertial_delays.utils.helpers import TimeLike, as_time, format_time


logger = logging.getLogger(__name__)

# A maximal run of constant value; None stands for -inf (start) or +inf (end).
Run = Tuple[Optional[Fraction], Optional[Fraction]]


def check_bit(value) -> int:
    if isinstance(value, bool):
        return int(value)
    if value not in (0, 1):
        raise MalformedSignalError(f"signal values are bits, got {value!r}")
    return int(value)


class EdgeKind(str, Enum):
    """Direction of a transition."""

    RISING = "rising"
    FALLING = "falling"

    @property
    def target(self) -> int:
        """Value the signal takes at the edge."""
        return 1 if self is EdgeKind.RISING else 0

    def flipped(self) -> "EdgeKind":
        return EdgeKind.FALLING if self is EdgeKind.RISING else EdgeKind.RISING


@dataclass(frozen=True)
class Edge:
    """A transition of a signal: the instant and its direction."""

    at: Fraction
    kind: EdgeKind

    def __str__(self) -> str:
        return f"{self.kind.value}@{format_time(self.at)}"


@dataclass(frozen=True)
class Window:
    """
    The closed sliding interval [t - delta, t - delta + mu].

    mu <= delta keeps the window at or before t.
    """

    delta: Fraction
    mu: Fraction

    def __post_init__(self):
        delta, mu = as_time(self.delta), as_time(self.mu)
        if not 0 <= mu <= delta:
            raise MalformedSignalError(
                f"window needs 0 <= mu <= delta, got delta={format_time(delta)}, mu={format_time(mu)}"
            )
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "mu", mu)

    def bounds_at(self, t: Fraction) -> Tuple[Fraction, Fraction]:
        """Closed interval the window covers when evaluated at t."""
        return t - self.delta, t - self.delta + self.mu

    def contains(self, other: "Window") -> bool:
        """True when this window covers the other one at every t."""
        return self.delta >= other.delta and self.delta - self.mu <= other.delta - other.mu


@dataclass(frozen=True)
class Signal:
    """
    Canonical binary signal.

    Attributes:
        initial: Value on (-inf, first transition)
        transitions: Strictly increasing instants, each flipping the value
    """

    initial: int
    transitions: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "initial", check_bit(self.initial))
        times = tuple(as_time(t) for t in self.transitions)
        for earlier, later in zip(times, times[1:]):
            if not earlier < later:
                raise MalformedSignalError(
                    f"transitions must be strictly increasing: {format_time(earlier)} then {format_time(later)}"
                )
        object.__setattr__(self, "transitions", times)

    @classmethod
    def constant(cls, value: int) -> "Signal":
        return cls(value, ())

    @classmethod
    def from_transitions(cls, initial: int, times: Iterable[TimeLike]) -> "Signal":
        """Build a signal from unsorted, possibly repeated flip instants.

        An instant listed twice flips twice and therefore cancels.
        """
        flips = {}
        for t in times:
            t = as_time(t)
            flips[t] = not flips.get(t, False)
        return cls(initial, tuple(sorted(t for t, odd in flips.items() if odd)))

    @classmethod
    def from_runs(cls, initial: int, runs: Iterable[Run]) -> "Signal":
        """
        Build a signal that is 1 - initial on the given runs.

        Runs must be ordered and separated; a run may start at -inf only when it
        is the first one (the signal then starts at 1 - initial).
        """
        times: List[Fraction] = []
        start_value = initial
        for index, (start, end) in enumerate(runs):
            if start is None:
                if index:
                    raise MalformedSignalError("only the first run may start at -inf")
                start_value = 1 - initial
            else:
                times.append(start)
            if end is not None:
                times.append(end)
        return cls.from_transitions(start_value, times)

    # evaluation

    def eval(self, t: TimeLike) -> int:
        """Value at t (right-continuous at transitions)."""
        flips = bisect_right(self.transitions, as_time(t))
        return self.initial ^ (flips & 1)

    def left_limit(self, t: TimeLike) -> int:
        """Value on (t - eps, t) for small eps."""
        flips = bisect_left(self.transitions, as_time(t))
        return self.initial ^ (flips & 1)

    def edges(self) -> List[Edge]:
        """One edge per transition, in time order."""
        result = []
        value = self.initial
        for t in self.transitions:
            value ^= 1
            result.append(Edge(t, EdgeKind.RISING if value else EdgeKind.FALLING))
        return result

    @property
    def final_value(self) -> int:
        """Limit at +inf."""
        return self.initial ^ (len(self.transitions) & 1)

    @property
    def is_constant(self) -> bool:
        return not self.transitions

    def runs(self, value: int = 1) -> List[Run]:
        """Maximal runs [start, end) where the signal equals value."""
        value = check_bit(value)
        bounds: List[Optional[Fraction]] = [None, *self.transitions, None]
        current = self.initial
        result = []
        for start, end in zip(bounds, bounds[1:]):
            if current == value:
                result.append((start, end))
            current ^= 1
        return result

    # transformations

    def translate(self, d: TimeLike) -> "Signal":
        """x o tau^d: every transition moved by +d."""
        d = as_time(d)
        return Signal(self.initial, tuple(t + d for t in self.transitions))

    def __invert__(self) -> "Signal":
        return Signal(1 - self.initial, self.transitions)

    def __and__(self, other: "Signal") -> "Signal":
        return combine(lambda a, b: a & b, self, other)

    def __or__(self, other: "Signal") -> "Signal":
        return combine(lambda a, b: a | b, self, other)

    def __xor__(self, other: "Signal") -> "Signal":
        return combine(lambda a, b: a ^ b, self, other)

    def __le__(self, other: "Signal") -> bool:
        """Pointwise order 0 <= 1."""
        excess = self & ~other
        return excess.is_constant and excess.initial == 0

    def __str__(self) -> str:
        pieces = " ".join(
            f"[{format_time(start)},{format_time(end)})"
            for start, end in self.runs(1 - self.initial)
            if start is not None
        )
        return f"{self.initial} | {pieces}".rstrip()


class PulseWidths(NamedTuple):
    """Shortest bounded high and low pulses of a signal (None if there is none)."""

    min_high: Optional[Fraction]
    min_low: Optional[Fraction]


def combine(op: Callable[[int, int], int], x: Signal, y: Signal) -> Signal:
    """Pointwise binary operation; the result keeps only real flips."""
    value = op(x.initial, y.initial)
    initial = value
    times = []
    for t in sorted(set(x.transitions) | set(y.transitions)):
        nxt = op(x.eval(t), y.eval(t))
        if nxt != value:
            times.append(t)
            value = nxt
    return Signal(initial, tuple(times))


def from_intervals(initial: int, intervals: Sequence[Tuple[TimeLike, Optional[TimeLike]]]) -> Signal:
    """
    Signal from a union of half-open intervals.

    With initial=0 the result is the characteristic function of the union; with
    initial=1 it is its complement (the intervals mark where the signal is 0).

    Args:
        initial: Background value
        intervals: Ordered, disjoint [start, end) pairs; end None means +inf and
            is only allowed on the last interval

    Returns:
        Canonical signal (touching intervals are merged)

    Raises:
        MalformedSignalError: For empty, overlapping or unordered intervals
    """
    initial = check_bit(initial)
    times: List[Fraction] = []
    previous_end: Optional[Fraction] = None
    for index, (start, end) in enumerate(intervals):
        start = as_time(start)
        end = None if end is None else as_time(end)
        if end is not None and not end > start:
            raise MalformedSignalError(f"interval [{format_time(start)},{format_time(end)}) is empty")
        if index and previous_end is None:
            raise MalformedSignalError("an unbounded interval must be the last one")
        if index and start < previous_end:
            raise MalformedSignalError(
                f"interval starting at {format_time(start)} overlaps or precedes the previous one"
            )
        if times and times[-1] == start:
            # [a,b) [b,c) touch: drop the shared boundary
            times.pop()
        else:
            times.append(start)
        if end is not None:
            times.append(end)
        previous_end = end
    return Signal(initial, tuple(times))


def eval_at(x: Signal, t: TimeLike) -> int:
    return x.eval(t)


def left_limit(x: Signal, t: TimeLike) -> int:
    return x.left_limit(t)


def edges(x: Signal) -> List[Edge]:
    return x.edges()


def final_value(x: Signal) -> int:
    return x.final_value


def translate(x: Signal, d: TimeLike) -> Signal:
    return x.translate(d)


_BOOL_OPS = {
    "and": lambda a, b: a & b,
    "or": lambda a, b: a | b,
    "xor": lambda a, b: a ^ b,
}


def bool_op(op: str, x: Signal, y: Optional[Signal] = None) -> Signal:
    """
    Pointwise Boolean operation by name.

    Args:
        op: One of "not", "and", "or", "xor"
        x: First operand
        y: Second operand (must be absent for "not")

    Returns:
        Canonical result
    """
    if op == "not":
        if y is not None:
            raise ValueError("'not' takes a single operand")
        return ~x
    if op not in _BOOL_OPS:
        raise ValueError(f"unknown Boolean operation {op!r}")
    if y is None:
        raise ValueError(f"'{op}' needs two operands")
    return combine(_BOOL_OPS[op], x, y)


def find_deviation(x: Signal, lo: Fraction, hi: Fraction, value: int) -> Optional[Fraction]:
    """
    Check that x equals value on the closed interval [lo, hi].

    Returns:
        None when it does, otherwise the first instant in [lo, hi] where it
        does not
    """
    if x.eval(lo) != value:
        return lo
    index = bisect_right(x.transitions, lo)
    if index < len(x.transitions) and x.transitions[index] <= hi:
        return x.transitions[index]
    return None


def erode(x: Signal, w: Window) -> Signal:
    """
    Sliding-window AND: 1 at t iff x is 1 on all of [t - delta, t - delta + mu].

    Each maximal 1-run [s, e) of x maps to [s + delta, e + delta - mu), which
    is empty when e - s <= mu.
    """
    eroded = []
    for start, end in x.runs(1):
        new_start = None if start is None else start + w.delta
        new_end = None if end is None else end + w.delta - w.mu
        if new_start is not None and new_end is not None and new_end <= new_start:
            continue
        eroded.append((new_start, new_end))
    return Signal.from_runs(0, eroded)


def min_pulse_widths(x: Signal) -> PulseWidths:
    """Shortest bounded 1-run and 0-run; unbounded runs do not count."""

    def shortest(value: int) -> Optional[Fraction]:
        widths = [end - start for start, end in x.runs(value) if start is not None and end is not None]
        return min(widths) if widths else None

    return PulseWidths(shortest(1), shortest(0))


def agree_until(x: Signal, y: Signal, cut: Fraction) -> bool:
    """True when x and y coincide on (-inf, cut]."""
    return x.initial == y.initial and (
        [t for t in x.transitions if t <= cut] == [t for t in y.transitions if t <= cut]
    )


def validate(x: Signal) -> None:
    """Raise MalformedSignalError unless x is in canonical form."""
    Signal(x.initial, x.transitions)
