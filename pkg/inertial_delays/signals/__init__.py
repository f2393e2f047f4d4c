"""
Binary signals: representation, Boolean algebra, translation and erosion.
"""

from inertial_delays.signals.core import (
    Edge,
    EdgeKind,
    PulseWidths,
    Signal,
    Window,
    agree_until,
    bool_op,
    combine,
    edges,
    erode,
    eval_at,
    final_value,
    find_deviation,
    from_intervals,
    left_limit,
    min_pulse_widths,
    translate,
    validate,
)
from inertial_delays.signals.generators import random_signal, random_window, signal_family, time_grid

__all__ = [
    "Edge",
    "EdgeKind",
    "PulseWidths",
    "Signal",
    "Window",
    "agree_until",
    "bool_op",
    "combine",
    "edges",
    "erode",
    "eval_at",
    "final_value",
    "find_deviation",
    "from_intervals",
    "left_limit",
    "min_pulse_widths",
    "translate",
    "validate",
    "random_signal",
    "random_window",
    "signal_family",
    "time_grid",
]
