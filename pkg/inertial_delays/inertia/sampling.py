"""
Constructive sampling of relative inertia members.
"""

import logging
from fractions import Fraction
from itertools import islice
from typing import Optional

import numpy as np

from inertial_delays.inertia.params import RIParams
from inertial_delays.signals.core import Signal, erode
from inertial_delays.signals.generators import time_grid


logger = logging.getLogger(__name__)

# Only the first few admissible grid instants compete for the next edge.
_LOOKAHEAD = 8


def sample_member(
    u: Signal,
    p: RIParams,
    rng: np.random.Generator,
    max_edges: int = 6,
    start: int = -4,
    stop: int = 16,
    denominator: int = 8,
    initial: Optional[int] = None,
) -> Signal:
    """
    Draw a random x with ri_member(u, x, p).

    Rising edges are only placed where erode(u, rise window) is 1 and falling
    edges where erode(not u, fall window) is 1, so every edge is permitted by
    construction. Edge instants come from a 1/denominator grid on
    [start, stop] and lean towards the earliest admissible instant, which
    keeps short pulses frequent.

    Args:
        u: Input signal
        p: Relative inertia parameters
        rng: numpy random generator
        max_edges: Upper bound on the number of edges of x
        start: First grid instant
        stop: Last grid instant
        denominator: Grid resolution
        initial: Initial value of x, random when None

    Returns:
        A member of f_RI^p(u)
    """
    allowed = {1: erode(u, p.rise_window), 0: erode(~u, p.fall_window)}
    grid = time_grid(start, stop, denominator)
    value = int(rng.integers(0, 2)) if initial is None else initial
    x_initial = value
    target_edges = int(rng.integers(0, max_edges + 1))
    times = []
    position = int(rng.integers(0, len(grid) // 2))
    while len(times) < target_edges:
        wanted = 1 - value
        admissible = (i for i in range(position, len(grid)) if allowed[wanted].eval(grid[i]))
        candidates = list(islice(admissible, _LOOKAHEAD))
        if not candidates:
            break
        pick = min(int(rng.geometric(0.5)) - 1, len(candidates) - 1)
        index = candidates[pick]
        times.append(grid[index])
        value = wanted
        position = index + 1
    logger.debug(f"Sampled member with {len(times)} edges for params {p}")
    return Signal(x_initial, tuple(times))


def pulse_floor(p: RIParams) -> Optional[Fraction]:
    """min(delta_f - delta_r + mu_r, delta_r - delta_f + mu_f), None if it is negative."""
    floor = min(p.delta_f - p.delta_r + p.mu_r, p.delta_r - p.delta_f + p.mu_f)
    return floor if floor >= 0 else None
