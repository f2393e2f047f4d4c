"""
Random and exhaustive signal families for corpora and property suites.
"""

from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence

import numpy as np

from inertial_delays.signals.core import Signal, Window


def time_grid(start: int, stop: int, denominator: int = 1) -> List[Fraction]:
    """All multiples of 1/denominator in [start, stop]."""
    return [Fraction(k, denominator) for k in range(start * denominator, stop * denominator + 1)]


def random_signal(
    rng: np.random.Generator,
    max_transitions: int = 6,
    start: int = 0,
    stop: int = 10,
    denominator: int = 2,
    initial: Optional[int] = None,
) -> Signal:
    """
    Draw a signal whose transitions lie on a rational grid.

    Args:
        rng: numpy random generator
        max_transitions: Upper bound on the number of transitions
        start: First grid instant
        stop: Last grid instant
        denominator: Grid resolution (1/denominator)
        initial: Fixed initial value, random when None

    Returns:
        Canonical signal
    """
    grid = time_grid(start, stop, denominator)
    count = int(rng.integers(0, min(max_transitions, len(grid)) + 1))
    picks = sorted(int(i) for i in rng.choice(len(grid), size=count, replace=False))
    value = int(rng.integers(0, 2)) if initial is None else initial
    return Signal(value, tuple(grid[i] for i in picks))


def random_window(rng: np.random.Generator, max_delta: int = 4, denominator: int = 2) -> Window:
    """Draw a window with delta and mu on the grid, 0 <= mu <= delta <= max_delta."""
    delta = Fraction(int(rng.integers(0, max_delta * denominator + 1)), denominator)
    mu = Fraction(int(rng.integers(0, int(delta * denominator) + 1)), denominator)
    return Window(delta, mu)


def signal_family(grid: Sequence[Fraction], max_transitions: int) -> Iterator[Signal]:
    """Every signal with at most max_transitions transitions on the grid."""
    for count in range(max_transitions + 1):
        for times in combinations(grid, count):
            for initial in (0, 1):
                yield Signal(initial, times)
