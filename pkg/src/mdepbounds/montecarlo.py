"""Seeded Monte Carlo estimation of union probabilities for window models.

Each trial derives its randomness purely from (seed, trial_index) through
a counter-based 64-bit mixing function, so the estimate is a deterministic
function of (model, range, trials, seed) no matter how the trials are
chunked or parallelized.  Intervals are 95% Wilson score intervals.
"""

from __future__ import annotations

import math
import operator
from typing import NamedTuple

import numpy as np

from .families import WindowModel

#: Two-sided 95% standard normal quantile.
Z95 = 1.959963984540054

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = np.uint64(0xFFFFFFFFFFFFFFFF)


def _mix64(x: np.ndarray) -> np.ndarray:
    """SplitMix64 finalizer, vectorized over uint64 arrays."""
    x = x.copy()
    x ^= x >> np.uint64(30)
    x *= _MIX1
    x ^= x >> np.uint64(27)
    x *= _MIX2
    x ^= x >> np.uint64(31)
    return x


def _uniforms(key: np.uint64, counters: np.ndarray) -> np.ndarray:
    """Uniform [0, 1) variates indexed by counter: draw c is the c-th
    output of the SplitMix64 stream keyed by `key`."""
    bits = _mix64(key + (counters + np.uint64(1)) * _GOLDEN)
    return (bits >> np.uint64(11)).astype(np.float64) * 2.0 ** -53


class MonteCarloEstimate(NamedTuple):
    estimate: float
    ci_low: float
    ci_high: float


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= successes <= trials:
        raise ValueError("successes must lie in 0..trials")
    phat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / trials
                         + z2 / (4.0 * trials * trials)) / denom
    # the edges are exact: k = 0 pins the lower end, k = n the upper
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high


def estimate_union(model: WindowModel, first: int, last: int,
                   trials: int, seed: int, *,
                   chunk_size: int = 1 << 16) -> MonteCarloEstimate:
    """Monte Carlo estimate of P(A_first or ... or A_last) with a 95%
    Wilson interval.

    Simulates `trials` independent symbol strings covering the requested
    windows and counts the strings on which any window fires.  An empty
    interval (first > last) returns (0, 0, 0).  `chunk_size` only bounds
    working memory; any chunking yields byte-identical results because
    trial t consumes exactly the counters [t*L, (t+1)*L) of the seed's
    stream.
    """
    if not isinstance(model, WindowModel):
        raise TypeError("Monte Carlo estimation applies to window models only")
    first = operator.index(first)
    last = operator.index(last)
    trials = operator.index(trials)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    if first > last:
        return MonteCarloEstimate(0.0, 0.0, 0.0)
    if first < 1 or last > model.horizon:
        raise IndexError(f"interval [{first}, {last}] outside the event "
                         f"range 1..{model.horizon}")

    s, m = model.alphabet_size, model.m
    n_windows = last - first + 1
    length = n_windows + m  # symbols per trial
    key = _mix64(np.array(operator.index(seed) & int(_U64),
                          dtype=np.uint64).reshape(()))
    cum = np.cumsum(model.dist_array)
    powers = s ** np.arange(m + 1, dtype=np.int64)
    table = model.table_array

    hits = 0
    for start in range(0, trials, chunk_size):
        stop = min(start + chunk_size, trials)
        trial_ids = np.arange(start, stop, dtype=np.uint64)
        counters = (trial_ids[:, None] * np.uint64(length)
                    + np.arange(length, dtype=np.uint64)[None, :])
        u = _uniforms(key, counters)
        symbols = np.searchsorted(cum, u, side="right")
        np.minimum(symbols, s - 1, out=symbols)  # guard the cumsum edge
        windows = np.lib.stride_tricks.sliding_window_view(symbols, m + 1, axis=1)
        fired = table[windows @ powers].any(axis=1)
        hits += int(fired.sum())

    estimate = hits / trials
    ci_low, ci_high = wilson_interval(hits, trials)
    return MonteCarloEstimate(estimate, ci_low, ci_high)
