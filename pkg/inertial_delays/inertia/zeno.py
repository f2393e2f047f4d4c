"""
Zeno witnesses for relative inertia properties.
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple

from inertial_delays.inertia.params import RIParams, dual_ri, ri_zeno_free
from inertial_delays.signals.core import Signal
from inertial_delays.utils.helpers import TimeLike, as_time, format_time


logger = logging.getLogger(__name__)


def zeno_witness(p: RIParams, epsilon: TimeLike) -> Optional[Tuple[Signal, Signal]]:
    """
    Build an (input, state) pair whose state pulse is shorter than epsilon.

    When delta_f <= delta_r - mu_r, the input 1 on (-inf, 0) admits the state
    pulse 1 on [delta_f - eps', delta_f) with eps' = epsilon / 2. When
    delta_r <= delta_f - mu_f the construction is applied to the dual
    parameters and both signals are complemented.

    Args:
        p: Relative inertia parameters
        epsilon: Strictly positive pulse width bound

    Returns:
        (u, x) with x a member of f_RI^p(u), or None when p is Zeno-free
    """
    epsilon = as_time(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be strictly positive")
    if ri_zeno_free(p):
        return None

    half = epsilon / 2
    if p.delta_f <= p.delta_r - p.mu_r:
        u = Signal(1, (Fraction(0),))
        x = Signal(0, (p.delta_f - half, p.delta_f))
        logger.debug(f"Zeno witness for {p}: high pulse of width {format_time(half)}")
        return u, x

    u, x = zeno_witness(dual_ri(p), epsilon)
    logger.debug(f"Zeno witness for {p} taken from the dual parameters")
    return ~u, ~x
