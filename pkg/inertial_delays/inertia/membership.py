"""
Membership in the relative and absolute inertia properties.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from inertial_delays.inertia.params import AIParams, RIParams
from inertial_delays.signals.core import EdgeKind, Signal, find_deviation
from inertial_delays.utils.helpers import format_time


logger = logging.getLogger(__name__)

MembershipPredicate = Callable[[Signal, Signal], bool]


@dataclass(frozen=True)
class Violation:
    """
    An edge that its inertia inequality does not permit.

    Attributes:
        at: Instant of the state edge
        edge_kind: Direction of the edge
        required_window: Closed interval over which the signal had to be constant
        witness_point: Instant inside the window where it was not
    """

    at: Fraction
    edge_kind: EdgeKind
    required_window: Tuple[Fraction, Fraction]
    witness_point: Fraction

    def __post_init__(self):
        lo, hi = self.required_window
        if not lo <= self.witness_point <= hi:
            raise ValueError("witness point must lie inside the required window")

    def describe(self, subject: str = "input") -> str:
        lo, hi = self.required_window
        return (
            f"{self.edge_kind.value} edge at {format_time(self.at)} needs {subject} {self.edge_kind.target} on "
            f"[{format_time(lo)},{format_time(hi)}]; fails at {format_time(self.witness_point)}"
        )


@dataclass(frozen=True)
class MembershipResult:
    """Verdict of a membership check; truthy when the state is a member."""

    holds: bool
    violations: List[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def ri_member(u: Signal, x: Signal, p: RIParams) -> MembershipResult:
    """
    Check x against the relative inertia inequalities for input u.

    Every rising edge of x at t needs u = 1 on [t - delta_r, t - delta_r + mu_r];
    every falling edge needs u = 0 on [t - delta_f, t - delta_f + mu_f].

    Args:
        u: Input signal
        x: State signal
        p: Relative inertia parameters

    Returns:
        Result with one Violation per offending edge
    """
    violations = []
    for edge in x.edges():
        window = p.rise_window if edge.kind is EdgeKind.RISING else p.fall_window
        lo, hi = window.bounds_at(edge.at)
        witness = find_deviation(u, lo, hi, edge.kind.target)
        if witness is not None:
            logger.debug(f"RI violation: {edge} window [{format_time(lo)},{format_time(hi)}] witness {format_time(witness)}")
            violations.append(Violation(edge.at, edge.kind, (lo, hi), witness))
    return MembershipResult(not violations, violations)


def ai_member(x: Signal, a: AIParams) -> MembershipResult:
    """
    Check x against the absolute inertia inequalities.

    After a rising edge at t, x must stay 1 on [t, t + d_r]; after a falling
    edge, 0 on [t, t + d_f].
    """
    violations = []
    for edge in x.edges():
        dwell = a.d_r if edge.kind is EdgeKind.RISING else a.d_f
        lo, hi = edge.at, edge.at + dwell
        witness = find_deviation(x, lo, hi, edge.kind.target)
        if witness is not None:
            violations.append(Violation(edge.at, edge.kind, (lo, hi), witness))
    return MembershipResult(not violations, violations)


def ri_predicate(p: RIParams) -> MembershipPredicate:
    """Membership in f_RI^p as a plain (u, x) -> bool callable."""

    def predicate(u: Signal, x: Signal) -> bool:
        return ri_member(u, x, p).holds

    predicate.__name__ = f"ri_member[{p}]"
    return predicate


def combine_members(mode: str, checks: Sequence[MembershipPredicate], u: Signal, x: Signal) -> bool:
    """
    Membership in the intersection or union of several properties.

    Args:
        mode: "intersection" or "union"
        checks: Non-empty list of membership predicates
        u: Input signal
        x: State signal

    Returns:
        AND (intersection) or OR (union) of the individual verdicts
    """
    if not checks:
        raise ValueError("combine_members needs at least one predicate")
    if mode == "intersection":
        return all(bool(check(u, x)) for check in checks)
    if mode == "union":
        return any(bool(check(u, x)) for check in checks)
    raise ValueError(f"unknown combination mode {mode!r}")
