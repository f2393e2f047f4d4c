#!/usr/bin/env python3
"""
Exhaustive check of the parameter order: ri_subset(p, q) holds exactly when
every member of the p property is a member of the q property, over all
signals with at most three transitions on the half-unit grid of [0, 6].
"""

import os
import sys
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from inertial_delays.inertia import RIParams, ri_member, ri_subset
from inertial_delays.signals import EdgeKind, Window, find_deviation, signal_family, time_grid

F = Fraction
VALUES = [F(0), F(1, 2), F(1), F(3, 2), F(2)]
WINDOWS = [Window(delta, mu) for delta in VALUES for mu in VALUES if mu <= delta]
GRID = time_grid(0, 6, 2)
SIGNALS = list(signal_family(GRID, 3))


def edge_tables():
    """permitted[kind][u, t, w]: an edge of that kind at GRID[t] is allowed by window w for input u."""
    permitted = {kind: np.zeros((len(SIGNALS), len(GRID), len(WINDOWS)), dtype=bool) for kind in EdgeKind}
    for i, u in enumerate(SIGNALS):
        for j, t in enumerate(GRID):
            for k, w in enumerate(WINDOWS):
                lo, hi = w.bounds_at(t)
                for kind in EdgeKind:
                    permitted[kind][i, j, k] = find_deviation(u, lo, hi, kind.target) is None
    return permitted


@lru_cache(maxsize=None)
def membership_bitsets():
    """Packed membership bitsets over all (x, u) pairs, one per (rise window, fall window)."""
    permitted = edge_tables()
    index = {t: j for j, t in enumerate(GRID)}
    rise = np.ones((len(SIGNALS), len(SIGNALS), len(WINDOWS)), dtype=bool)
    fall = np.ones_like(rise)
    for n, x in enumerate(SIGNALS):
        for kind, table in ((EdgeKind.RISING, rise), (EdgeKind.FALLING, fall)):
            columns = [index[edge.at] for edge in x.edges() if edge.kind is kind]
            if columns:
                table[n] = permitted[kind][:, columns, :].all(axis=1)
    bitsets = {}
    for r, f in product(range(len(WINDOWS)), repeat=2):
        bitsets[r, f] = np.packbits(rise[:, :, r] & fall[:, :, f])
    return bitsets, rise, fall


def params_of(r: int, f: int) -> RIParams:
    return RIParams.of(WINDOWS[r].mu, WINDOWS[r].delta, WINDOWS[f].mu, WINDOWS[f].delta)


def test_bitsets_agree_with_ri_member():
    _, rise, fall = membership_bitsets()
    rng = np.random.default_rng(3)
    for _ in range(2_000):
        n, i = (int(v) for v in rng.integers(0, len(SIGNALS), size=2))
        r, f = (int(v) for v in rng.integers(0, len(WINDOWS), size=2))
        expected = ri_member(SIGNALS[i], SIGNALS[n], params_of(r, f)).holds
        assert bool(rise[n, i, r] and fall[n, i, f]) == expected


def test_subset_matches_membership_inclusion():
    bitsets, _, _ = membership_bitsets()
    keys = list(bitsets)
    for p_key, q_key in product(keys, repeat=2):
        included = not (bitsets[p_key] & ~bitsets[q_key]).any()
        assert ri_subset(params_of(*p_key), params_of(*q_key)) == included, (p_key, q_key)
