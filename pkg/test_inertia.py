#!/usr/bin/env python3
"""
Tests for relative and absolute inertia: membership, order, duality,
the RI to AI map, Zeno analysis and window searches.
"""

import os
import sys
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from inertial_delays.errors import MalformedSignalError, UnfittableCorpusError
from inertial_delays.inertia import (
    AIParams,
    RIParams,
    Violation,
    ai_member,
    combine_members,
    describe_window,
    diagnose_window,
    dominating_window,
    dual_ri,
    fit_ri,
    intersection_envelope,
    pulse_floor,
    ri_member,
    ri_predicate,
    ri_subset,
    ri_to_ai,
    ri_zeno_free,
    sample_member,
    zeno_witness,
)
from inertial_delays.signals import EdgeKind, Signal, Window, erode, from_intervals, min_pulse_widths, random_signal

F = Fraction
U = from_intervals(0, [(0, 1), (2, 3), (4, None)])
X = from_intervals(0, [(0, 3), (5, None)])
Y = from_intervals(0, [(0, 4), (8, None)])
STEP = from_intervals(0, [(0, None)])

GRID = [F(0), F(1, 2), F(1), F(3, 2), F(2)]
WINDOWS = [(mu, delta) for delta in GRID for mu in GRID if mu <= delta]
PARAMS_GRID = [RIParams.of(mr, dr, mf, df) for (mr, dr), (mf, df) in product(WINDOWS, WINDOWS)]


def random_params(rng, max_delta=2, denominator=2) -> RIParams:
    (mr, dr), (mf, df) = (WINDOWS[int(rng.integers(0, len(WINDOWS)))] for _ in range(2))
    return RIParams.of(mr, dr, mf, df)


# Parameters

def test_params_validation():
    with pytest.raises(ValueError):
        RIParams.of(2, 1, 0, 0)
    with pytest.raises(ValueError):
        RIParams.of(-1, 1, 0, 0)
    with pytest.raises(ValueError):
        AIParams.of(-1, 0)
    with pytest.raises((TypeError, ValueError)):
        RIParams.of(0.5, 1, 0, 1)


def test_params_parse_and_format():
    p = RIParams.parse("0,1/2,0.5,2")
    assert p == RIParams.of(0, F(1, 2), F(1, 2), 2)
    assert str(p) == "0,1/2,1/2,2"
    assert str(AIParams.parse("1,3/2")) == "1,3/2"
    with pytest.raises(ValueError):
        RIParams.parse("1,2,3")


def test_describe_window():
    assert describe_window(F(3), F(1)) == "[t-3,t-2]"
    assert describe_window(F(1), F(1)) == "[t-1,t]"


# Membership

def test_ri_member_self_timed_stage():
    assert ri_member(U, X, RIParams.of(0, 0, 0, 0)).holds


def test_ri_member_reports_violation_at_four():
    result = ri_member(U, Y, RIParams.of(0, 0, 0, 0))
    assert not result
    assert len(result.violations) == 1
    violation = result.violations[0]
    assert violation.at == 4
    assert violation.edge_kind is EdgeKind.FALLING
    assert violation.required_window == (4, 4)
    assert violation.witness_point == 4


def test_ri_member_constant_state():
    for x in (Signal.constant(0), Signal.constant(1)):
        assert ri_member(U, x, RIParams.of(1, 3, 0, 2)).holds


def test_violation_witness_must_be_inside_window():
    with pytest.raises(ValueError):
        Violation(F(4), EdgeKind.FALLING, (F(4), F(4)), F(5))


def test_ai_member_examples():
    assert ai_member(from_intervals(0, [(0, 4)]), AIParams.of(2, 2)).holds
    result = ai_member(from_intervals(0, [(0, 1)]), AIParams.of(2, 0))
    assert not result
    assert result.violations[0].witness_point == 1
    assert ai_member(Signal.constant(1), AIParams.of(5, 5)).holds


# Order, duality, maps

def test_ri_subset_examples():
    p = RIParams.of(1, 2, 1, 2)
    assert ri_subset(p, p)
    assert ri_subset(RIParams.of(2, 3, 2, 3), RIParams.of(1, 2, 1, 2))
    assert not ri_subset(RIParams.of(1, 3, 1, 3), RIParams.of(1, 1, 1, 1))
    assert not ri_subset(RIParams.of(1, 1, 1, 1), RIParams.of(1, 3, 1, 3))


def test_dual_ri():
    assert dual_ri(RIParams.of(1, 2, 3, 4)) == RIParams.of(3, 4, 1, 2)
    p = RIParams.of(0, 1, F(1, 2), 3)
    assert dual_ri(dual_ri(p)) == p
    assert dual_ri(RIParams.of(1, 2, 1, 2)) == RIParams.of(1, 2, 1, 2)


def test_ri_to_ai():
    assert ri_to_ai(RIParams.of(1, 2, 1, 2)) == AIParams.of(1, 1)
    assert ri_to_ai(RIParams.of(3, 3, 3, 3)) == AIParams.of(3, 3)
    assert ri_to_ai(RIParams.of(0, 3, 0, 1)) is None


def test_ri_zeno_free():
    assert ri_zeno_free(RIParams.of(1, 2, 1, 2))
    assert not ri_zeno_free(RIParams.of(0, 3, 0, 3))
    assert not ri_zeno_free(RIParams.of(0, 0, 0, 0))


def test_intersection_envelope():
    p, q = RIParams.of(2, 3, 2, 3), RIParams.of(1, 2, 1, 2)
    assert intersection_envelope(p, q) == p
    assert intersection_envelope(q, p) == p
    incomparable = RIParams.of(1, 1, 1, 1)
    assert intersection_envelope(incomparable, p) == incomparable


# Zeno witnesses

def test_zeno_witness_direct_construction():
    u, x = zeno_witness(RIParams.of(0, 3, 0, 1), F(1, 2))
    assert u == Signal(1, (F(0),))
    assert x == from_intervals(0, [(F(3, 4), 1)])
    assert ri_member(u, x, RIParams.of(0, 3, 0, 1)).holds


def test_zeno_witness_none_when_zeno_free():
    assert zeno_witness(RIParams.of(1, 2, 1, 2), 1) is None


def test_zeno_witness_dual_construction():
    p = RIParams.of(0, 1, 0, 3)
    u, x = zeno_witness(p, F(1, 2))
    assert ri_member(u, x, p).holds
    assert [edge.kind for edge in x.edges()] == [EdgeKind.FALLING, EdgeKind.RISING]
    assert min_pulse_widths(x).min_low == F(1, 4)


def test_zeno_witness_all_zero_params():
    u, x = zeno_witness(RIParams.of(0, 0, 0, 0), F(1, 8))
    assert ri_member(u, x, RIParams.of(0, 0, 0, 0)).holds
    assert min_pulse_widths(x).min_high == F(1, 16)


def test_zeno_witness_rejects_non_positive_epsilon():
    with pytest.raises(ValueError):
        zeno_witness(RIParams.of(0, 3, 0, 1), 0)


# Combinators

def test_combine_members():
    p1, p2 = RIParams.of(1, 3, 1, 3), RIParams.of(1, 1, 1, 1)
    u, x = STEP, from_intervals(0, [(1, None)])
    assert not ri_member(u, x, p1).holds
    assert ri_member(u, x, p2).holds
    checks = [ri_predicate(p1), ri_predicate(p2)]
    assert not combine_members("intersection", checks, u, x)
    assert combine_members("union", checks, u, x)
    assert combine_members("intersection", [ri_predicate(p2)], u, x) == ri_member(u, x, p2).holds
    for mode in ("intersection", "union"):
        assert combine_members(mode, checks, u, Signal.constant(1))


def test_combine_members_rejects_empty_and_unknown():
    with pytest.raises(ValueError):
        combine_members("intersection", [], U, X)
    with pytest.raises(ValueError):
        combine_members("difference", [ri_predicate(RIParams.of(0, 0, 0, 0))], U, X)


# Window searches

def test_dominating_window_serial_data():
    diagnosis = diagnose_window(U, [0, 8], [4], 20)
    assert diagnosis.params is None
    assert diagnosis.delta_max == 0
    assert diagnosis.blocked.kind is EdgeKind.FALLING
    assert diagnosis.blocked.start == 4
    assert diagnosis.summary() == "no dominating RI window (forced δ=μ=0; falling edge at 4 violates)"
    assert dominating_window(U, [0, 8], [4], 20) is None


def test_dominating_window_union_data():
    u = from_intervals(0, [(0, 2)])
    windows = [Window(3, 1), Window(1, 1)]
    allowed_rise = erode(u, windows[0]) | erode(u, windows[1])
    allowed_fall = erode(~u, windows[0]) | erode(~u, windows[1])
    assert allowed_rise == from_intervals(0, [(1, 2), (3, 4)])
    diagnosis = diagnose_window(u, allowed_rise, allowed_fall, 20)
    assert diagnosis.params is None
    assert diagnosis.contradictory
    assert diagnosis.delta_max == 1
    assert diagnosis.lag_min == 2
    assert diagnosis.summary() == "no dominating RI window (δ−μ ≥ 2 and δ ≤ 1 contradict)"


def test_dominating_window_feasible():
    p = dominating_window(STEP, [1], [], 2)
    assert p is not None
    assert p.delta_r <= 1
    assert p == RIParams.of(1, 1, 1, 1)
    assert erode(STEP, p.rise_window).eval(1) == 1


def test_dominating_window_covers_demanded_stretches():
    u = from_intervals(0, [(0, 4)])
    allowed = from_intervals(0, [(1, 2)])
    p = dominating_window(u, allowed, [], 10)
    assert p is not None
    assert allowed <= erode(u, p.rise_window)


def test_dominating_window_rejects_bad_bound():
    with pytest.raises(MalformedSignalError):
        dominating_window(U, [0], [], 0)


def test_fit_ri_transport_trace():
    frontier = fit_ri([(STEP, from_intervals(0, [(2, None)]))], 5)
    assert RIParams.of(2, 2, 2, 2) in frontier


def test_fit_ri_identity_trace():
    frontier = fit_ri([(U, U)], 20)
    assert RIParams.of(0, 0, 0, 0) in frontier


def test_fit_ri_serial_pair_unfittable():
    with pytest.raises(UnfittableCorpusError) as info:
        fit_ri([(U, Y)], 20)
    pair, kind, at = info.value.edges[0]
    assert (pair, kind, at) == (0, EdgeKind.FALLING, 4)


def test_fit_ri_per_edge_kind():
    frontier = fit_ri([(U, Y)], 20, symmetric=False)
    assert len(frontier) == 3
    for p in frontier:
        assert ri_member(U, Y, p).holds
    assert RIParams.of(0, 0, F(63, 4), 20) in frontier


def test_fit_ri_frontier_members_and_order():
    rng = np.random.default_rng(7)
    for _ in range(30):
        p = random_params(rng)
        corpus = []
        for _ in range(3):
            u = random_signal(rng, max_transitions=4, start=0, stop=8, denominator=2)
            corpus.append((u, sample_member(u, p, rng, max_edges=4)))
        frontier = fit_ri(corpus, 4, symmetric=False)
        assert frontier
        for q in frontier:
            assert all(ri_member(u, x, q).holds for u, x in corpus)
        deltas = [q.delta_r for q in frontier]
        assert deltas == sorted(deltas, reverse=True)


def window_grid(corpus, bound):
    """Transition time differences within each pair, 0 and bound, plus midpoints."""
    points = {F(0), F(bound)}
    for u, x in corpus:
        times = sorted(set(u.transitions) | set(x.transitions))
        points |= {b - a for a in times for b in times if 0 < b - a <= bound}
    ordered = sorted(points)
    return sorted(points | {(a + b) / 2 for a, b in zip(ordered, ordered[1:])})


def covered(frontier, delta, lag):
    return any(q.delta_r >= delta and q.delta_r - q.mu_r <= lag for q in frontier)


def test_fit_ri_strict_lag_keeps_smaller_windows():
    u = from_intervals(0, [(3, 5), (6, F(15, 2)), (8, None)])
    x = from_intervals(0, [(10, None)])
    frontier = fit_ri([(u, x)], 10)
    assert frontier == [
        RIParams.symmetric(F(3, 2), 7),
        RIParams.symmetric(F(11, 8), 4),
        RIParams.symmetric(2, 2),
    ]
    assert ri_member(u, x, RIParams.symmetric(3 - F(11, 4), 3)).holds
    assert covered(frontier, 3, F(11, 4))


def test_fit_ri_frontier_covers_every_grid_window():
    rng = np.random.default_rng(37)
    bound = 4
    for _ in range(40):
        mu, delta = WINDOWS[int(rng.integers(0, len(WINDOWS)))]
        u = random_signal(rng, max_transitions=3, start=0, stop=6, denominator=2)
        x = sample_member(u, RIParams.symmetric(mu, delta), rng, max_edges=3, start=0, stop=8, denominator=2)
        frontier = fit_ri([(u, x)], bound)
        for q in frontier:
            assert ri_member(u, x, q).holds
        grid = window_grid([(u, x)], bound)
        for d in grid:
            for lag in (v for v in grid if v <= d):
                if ri_member(u, x, RIParams.symmetric(d - lag, d)).holds:
                    assert covered(frontier, d, lag), (u, x, d, lag)


def test_fit_ri_rejects_empty_corpus():
    with pytest.raises(ValueError):
        fit_ri([], 5)


# Property suites

def test_sampled_members_are_members():
    rng = np.random.default_rng(11)
    for _ in range(500):
        u = random_signal(rng)
        p = random_params(rng)
        assert ri_member(u, sample_member(u, p, rng), p).holds


def test_duality_suite():
    rng = np.random.default_rng(5)
    for index in range(10_000):
        u = random_signal(rng, max_transitions=5)
        p = random_params(rng)
        x = sample_member(u, p, rng, max_edges=4) if index % 2 else random_signal(rng, max_transitions=4)
        assert ri_member(u, x, p).holds == ri_member(~u, ~x, dual_ri(p)).holds


def test_ri_implies_ai_suite():
    rng = np.random.default_rng(13)
    with_map = [p for p in PARAMS_GRID if ri_to_ai(p) is not None]
    for index in range(1_000):
        p = with_map[index % len(with_map)]
        u = random_signal(rng)
        x = sample_member(u, p, rng)
        assert ri_member(u, x, p).holds
        assert ai_member(x, ri_to_ai(p)).holds, (u, x, p)


def test_zeno_witness_suite():
    for p in PARAMS_GRID:
        if ri_zeno_free(p):
            assert zeno_witness(p, 1) is None
            continue
        for epsilon in (F(1), F(1, 2), F(1, 4), F(1, 8)):
            u, x = zeno_witness(p, epsilon)
            assert ri_member(u, x, p).holds
            high, low = min_pulse_widths(x)
            assert min(w for w in (high, low) if w is not None) < epsilon


def test_zeno_free_members_keep_their_dwell():
    rng = np.random.default_rng(17)
    zeno_free = [p for p in PARAMS_GRID if ri_zeno_free(p)]
    for index in range(10_000):
        p = zeno_free[index % len(zeno_free)]
        a = ri_to_ai(p)
        u = random_signal(rng)
        x = sample_member(u, p, rng)
        high, low = min_pulse_widths(x)
        assert high is None or high > a.d_r
        assert low is None or low > a.d_f
        assert all(w > pulse_floor(p) for w in (high, low) if w is not None)


def test_intersection_residence():
    rng = np.random.default_rng(19)
    for _ in range(500):
        p, q = random_params(rng), random_params(rng)
        u = random_signal(rng)
        x = sample_member(u, p, rng) if rng.integers(0, 2) else sample_member(u, q, rng)
        if combine_members("intersection", [ri_predicate(p), ri_predicate(q)], u, x):
            assert ri_member(u, x, p).holds
            assert ri_member(u, x, intersection_envelope(p, q)).holds


def test_membership_translation_invariant():
    rng = np.random.default_rng(23)
    for _ in range(500):
        u = random_signal(rng)
        p = random_params(rng)
        x = sample_member(u, p, rng) if rng.integers(0, 2) else random_signal(rng)
        d = F(int(rng.integers(-20, 21)), 4)
        assert ri_member(u.translate(d), x.translate(d), p).holds == ri_member(u, x, p).holds


def test_membership_non_anticipatory():
    rng = np.random.default_rng(29)
    for _ in range(500):
        u = random_signal(rng)
        p = random_params(rng)
        x = sample_member(u, p, rng) if rng.integers(0, 2) else random_signal(rng)
        if x.is_constant:
            continue
        v = u ^ Signal(0, (x.transitions[-1] + F(1, 8),))
        assert ri_member(v, x, p).holds == ri_member(u, x, p).holds
