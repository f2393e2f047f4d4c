"""
Window searches: the single symmetric window dominating a set of edge
requirements, and the frontier of windows consistent with a corpus.

Writing lag = delta - mu, an erosion of a 1-run [s, e) is [s + delta, e + lag).
A requirement (an instant or a stretch of time where an edge must be allowed)
fits inside one such run iff delta <= a - s and lag >= b - e (lag > a - e for
an instant a). Each requirement is therefore a disjunction, over the runs of
the input, of constraints "delta <= limit, lag >= floor"; the solver works on
those constraints directly.
"""

import logging
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from inertial_delays.errors import MalformedSignalError, UnfittableCorpusError
from inertial_delays.inertia.params import RIParams
from inertial_delays.signals.core import EdgeKind, Signal
from inertial_delays.utils.helpers import TimeLike, as_time, format_time


logger = logging.getLogger(__name__)

Allowed = Union[Signal, Iterable[TimeLike]]


@dataclass(frozen=True)
class Demand:
    """
    Where an edge of the given kind has to be permitted.

    An instant demand has start == end; otherwise the demand is the half-open
    stretch [start, end) with None for -inf / +inf.
    """

    kind: EdgeKind
    start: Optional[Fraction]
    end: Optional[Fraction]
    instant: bool = False
    source: Optional[int] = None

    def __str__(self) -> str:
        if self.instant:
            text = f"{self.kind.value} edge at {format_time(self.start)}"
        else:
            left = "-inf" if self.start is None else format_time(self.start)
            text = f"{self.kind.value} demand on [{left},{format_time(self.end)})"
        if self.source is not None:
            text += f" (pair {self.source})"
        return text


@dataclass(frozen=True)
class _Option:
    """delta <= limit and lag >= floor (lag > floor when strict); None is unbounded."""

    limit: Optional[Fraction]
    floor: Optional[Fraction]
    strict: bool


@dataclass(frozen=True)
class _Requirement:
    demand: Demand
    options: Tuple[_Option, ...]


def _options(u: Signal, demand: Demand) -> Tuple[_Option, ...]:
    value = demand.kind.target
    a, b = demand.start, demand.end
    options = []
    for s, e in u.runs(value):
        if s is None:
            limit = None
        elif a is None:
            continue
        else:
            limit = a - s
            if limit < 0:
                continue
        if e is None:
            floor, strict = None, False
        elif demand.instant:
            floor, strict = a - e, True
        elif b is None:
            continue
        else:
            floor, strict = b - e, False
        if limit is not None and floor is not None and (floor > limit or (strict and floor >= limit)):
            continue
        options.append(_Option(limit, floor, strict))
    return tuple(options)


def demands_from(kind: EdgeKind, allowed: Allowed, source: Optional[int] = None) -> List[Demand]:
    """
    Turn an allowed-edge description into demands.

    Args:
        kind: Edge direction the demands are about
        allowed: A signal (its 1-runs are demanded) or instants
        source: Optional corpus index carried into diagnostics
    """
    if isinstance(allowed, Signal):
        return [Demand(kind, start, end, False, source) for start, end in allowed.runs(1)]
    return [Demand(kind, t, t, True, source) for t in sorted({as_time(t) for t in allowed})]


def _candidate_grid(time_groups: Iterable[Iterable[Fraction]], bound: Fraction) -> List[Fraction]:
    """
    Candidate values for delta and delta - mu.

    Differences of transition times within each group, capped at bound, with
    0 and bound added, plus the midpoints between consecutive candidates.
    """
    points = {Fraction(0), bound}
    for group in time_groups:
        times = sorted(set(group))
        for i, a in enumerate(times):
            for b in times[i + 1:]:
                if b - a > bound:
                    break
                points.add(b - a)
    ordered = sorted(points)
    return sorted(points.union((a + b) / 2 for a, b in zip(ordered, ordered[1:])))


def _lag_for(
    requirements: Sequence[_Requirement], delta: Fraction, grid: Sequence[Fraction]
) -> Optional[Fraction]:
    """
    Smallest usable lag for a fixed delta, or None when delta is infeasible.

    A strict bound lag > L has no least value; the lag then sits halfway
    between L and the next grid value above it, which does not depend on delta.
    """
    lower: Optional[Fraction] = None
    lower_strict = False
    for requirement in requirements:
        usable = [o for o in requirement.options if o.limit is None or o.limit >= delta]
        if not usable:
            return None
        if any(o.floor is None for o in usable):
            continue
        floor = min(o.floor for o in usable)
        strict = all(o.strict for o in usable if o.floor == floor)
        if lower is None or floor > lower or (floor == lower and strict):
            lower, lower_strict = floor, strict
    if lower is None or lower < 0:
        return Fraction(0)
    if not lower_strict:
        return lower if lower <= delta else None
    if lower >= delta:
        return None
    index = bisect_right(grid, lower)
    above = grid[index] if index < len(grid) else delta
    return (lower + min(above, delta)) / 2


def _frontier(
    requirements: Sequence[_Requirement], bound: Fraction, grid: Sequence[Fraction]
) -> List[Tuple[Fraction, Fraction]]:
    """Pareto optimal (delta, lag) points: delta as large and lag as small as possible."""
    candidates = {bound}
    for requirement in requirements:
        for option in requirement.options:
            if option.limit is not None and 0 <= option.limit <= bound:
                candidates.add(option.limit)
    points = []
    best_lag: Optional[Fraction] = None
    for delta in sorted(candidates, reverse=True):
        lag = _lag_for(requirements, delta, grid)
        if lag is None:
            continue
        if best_lag is None or lag < best_lag:
            points.append((delta, lag))
            best_lag = lag
        logger.debug(f"candidate delta={format_time(delta)} -> lag={format_time(lag)}")
    return points


@dataclass(frozen=True)
class WindowDiagnosis:
    """
    Outcome of a dominating window search with its explanation.

    Attributes:
        params: Feasible symmetric parameters, None if there are none
        delta_max: Tightest forced upper bound on delta
        delta_reason: Demand that forced delta_max (None if only the search bound did)
        lag_min: Tightest forced lower bound on delta - mu
        lag_strict: Whether lag_min is a strict bound
        lag_reason: Demand that forced lag_min
        blocked: Demand left with no admissible window, if any
    """

    params: Optional[RIParams]
    delta_max: Fraction
    delta_reason: Optional[Demand]
    lag_min: Fraction
    lag_strict: bool
    lag_reason: Optional[Demand]
    blocked: Optional[Demand]

    @property
    def contradictory(self) -> bool:
        """The forced bounds alone leave no room for a window."""
        return self.lag_min > self.delta_max or (self.lag_strict and self.lag_min >= self.delta_max)

    def forced_constraints(self) -> List[str]:
        constraints = []
        if self.delta_reason is not None or self.contradictory:
            constraints.append(f"δ ≤ {format_time(self.delta_max)}")
        if self.lag_reason is not None:
            relation = ">" if self.lag_strict else "≥"
            constraints.append(f"δ−μ {relation} {format_time(self.lag_min)}")
        return constraints

    def summary(self) -> str:
        if self.params is not None:
            return f"dominating RI window {self.params}"
        if self.contradictory and self.blocked is None:
            return f"no dominating RI window ({' and '.join(reversed(self.forced_constraints()))} contradict)"
        if self.delta_reason is not None and self.delta_max == 0:
            forced = "forced δ=μ=0"
        elif self.forced_constraints():
            forced = "forced " + ", ".join(self.forced_constraints())
        else:
            forced = "no forced bounds"
        if self.blocked is not None:
            return f"no dominating RI window ({forced}; {self.blocked} violates)"
        return f"no dominating RI window ({forced}; no candidate satisfies every demand)"


def _propagate(requirements: Sequence[_Requirement], bound: Fraction) -> WindowDiagnosis:
    delta_max, delta_reason = bound, None
    lag_min, lag_strict, lag_reason = Fraction(0), False, None

    def compatible(option: _Option) -> bool:
        top = delta_max if option.limit is None else min(delta_max, option.limit)
        low, strict = lag_min, lag_strict
        if option.floor is not None and (option.floor > low or (option.floor == low and option.strict)):
            low, strict = option.floor, option.strict
        return low < top if strict else low <= top

    changed = True
    while changed:
        changed = False
        for requirement in requirements:
            live = [o for o in requirement.options if compatible(o)]
            if not live:
                floors = [o.floor for o in requirement.options]
                if delta_max > 0 and floors and None not in floors:
                    # The demand alone needs more lag than the forced delta allows.
                    floor = min(floors)
                    strict = all(o.strict for o in requirement.options if o.floor == floor)
                    if floor > delta_max or (strict and floor >= delta_max):
                        return WindowDiagnosis(None, delta_max, delta_reason, floor, strict, requirement.demand, None)
                return WindowDiagnosis(
                    None, delta_max, delta_reason, lag_min, lag_strict, lag_reason, requirement.demand
                )
            if all(o.limit is not None for o in live):
                hull_limit = max(o.limit for o in live)
                if hull_limit < delta_max:
                    delta_max, delta_reason, changed = hull_limit, requirement.demand, True
            if all(o.floor is not None for o in live):
                hull_floor = min(o.floor for o in live)
                hull_strict = all(o.strict for o in live if o.floor == hull_floor)
                if hull_floor > lag_min or (hull_floor == lag_min and hull_strict and not lag_strict):
                    lag_min, lag_strict, lag_reason, changed = hull_floor, hull_strict, requirement.demand, True
            if lag_min > delta_max or (lag_strict and lag_min >= delta_max):
                return WindowDiagnosis(None, delta_max, delta_reason, lag_min, lag_strict, lag_reason, None)
    return WindowDiagnosis(None, delta_max, delta_reason, lag_min, lag_strict, lag_reason, None)


def _check_bound(bound: TimeLike) -> Fraction:
    bound = as_time(bound)
    if bound <= 0:
        raise MalformedSignalError(f"search bound must be positive, got {format_time(bound)}")
    return bound


def diagnose_window(u: Signal, allowed_rise: Allowed, allowed_fall: Allowed, bound: TimeLike) -> WindowDiagnosis:
    """
    Search a symmetric window (mu, delta, mu, delta) under which every demanded
    edge is permitted, and explain the outcome.

    Args:
        u: Input signal
        allowed_rise: Where rising edges must be permitted (signal or instants)
        allowed_fall: Where falling edges must be permitted (signal or instants)
        bound: Cap on delta, strictly positive

    Returns:
        Diagnosis carrying the feasible params (largest delta, then largest mu)
        or the forced bounds and the demand that could not be met
    """
    bound = _check_bound(bound)
    demands = demands_from(EdgeKind.RISING, allowed_rise) + demands_from(EdgeKind.FALLING, allowed_fall)
    requirements = [_Requirement(d, _options(u, d)) for d in demands]
    times = [*u.transitions, *(t for d in demands for t in (d.start, d.end) if t is not None)]
    return _solve(requirements, bound, _candidate_grid([times], bound))


def _solve(requirements: Sequence[_Requirement], bound: Fraction, grid: Sequence[Fraction]) -> WindowDiagnosis:
    diagnosis = _propagate(requirements, bound)
    frontier = _frontier(requirements, bound, grid)
    if not frontier:
        logger.info(f"No dominating window: {diagnosis.summary()}")
        return diagnosis
    delta, lag = frontier[0]
    return WindowDiagnosis(
        RIParams.symmetric(delta - lag, delta),
        diagnosis.delta_max,
        diagnosis.delta_reason,
        diagnosis.lag_min,
        diagnosis.lag_strict,
        diagnosis.lag_reason,
        None,
    )


def dominating_window(u: Signal, allowed_rise: Allowed, allowed_fall: Allowed, bound: TimeLike) -> Optional[RIParams]:
    """
    Symmetric parameters whose erosions of u and not u dominate the allowed edges.

    See diagnose_window for the explanation of a negative answer.
    """
    return diagnose_window(u, allowed_rise, allowed_fall, bound).params


def fit_ri(
    corpus: Sequence[Tuple[Signal, Signal]],
    bound: TimeLike,
    symmetric: bool = True,
    progress: bool = False,
) -> List[RIParams]:
    """
    Tightest relative inertia envelopes consistent with a corpus of (u, x) pairs.

    Larger windows mean smaller properties, so the frontier lists the maximal
    windows (delta as large, delta - mu as small as possible) under which
    every pair is a member. A finite corpus only approximates the property
    generated by a delay from above: adding pairs can only shrink the frontier.

    Args:
        corpus: Non-empty list of (input, state) pairs
        bound: Cap on delta, strictly positive
        symmetric: Fit one window shared by both edge kinds (as the serial and
            union counterexamples assume); otherwise fit rise and fall windows
            independently and return their product
        progress: Show a tqdm progress bar while collecting constraints

    Returns:
        Frontier of parameters, largest delta first

    Raises:
        UnfittableCorpusError: When no window within bound admits every edge
    """
    if not corpus:
        raise ValueError("fit_ri needs a non-empty corpus")
    bound = _check_bound(bound)

    requirements = []
    for index, (u, x) in enumerate(tqdm(corpus, desc="constraints", disable=not progress)):
        for edge in x.edges():
            demand = Demand(edge.kind, edge.at, edge.at, True, index)
            requirements.append(_Requirement(demand, _options(u, demand)))
    grid = _candidate_grid(([*u.transitions, *x.transitions] for u, x in corpus), bound)

    if symmetric:
        frontier = _frontier(requirements, bound, grid)
        if not frontier:
            _raise_unfittable(requirements, bound)
        params = [RIParams.symmetric(delta - lag, delta) for delta, lag in frontier]
    else:
        rising = [r for r in requirements if r.demand.kind is EdgeKind.RISING]
        falling = [r for r in requirements if r.demand.kind is EdgeKind.FALLING]
        rise_frontier = _frontier(rising, bound, grid)
        fall_frontier = _frontier(falling, bound, grid)
        if not rise_frontier:
            _raise_unfittable(rising, bound)
        if not fall_frontier:
            _raise_unfittable(falling, bound)
        params = [
            RIParams.of(dr - lr, dr, df - lf, df)
            for dr, lr in rise_frontier
            for df, lf in fall_frontier
        ]
    logger.info(f"Fitted {len(params)} frontier point(s) from {len(corpus)} pair(s)")
    return params


def _raise_unfittable(requirements: Sequence[_Requirement], bound: Fraction) -> None:
    diagnosis = _propagate(requirements, bound)
    if diagnosis.blocked is not None:
        offenders = [diagnosis.blocked]
    else:
        offenders = [d for d in (diagnosis.lag_reason, diagnosis.delta_reason) if d is not None]
    if not offenders:
        offenders = [r.demand for r in requirements if not r.options][:1] or [requirements[-1].demand]
    edges = [(d.source, d.kind, d.start) for d in offenders]
    raise UnfittableCorpusError(f"corpus cannot be fitted within bound {format_time(bound)}: {diagnosis.summary()}", edges)
