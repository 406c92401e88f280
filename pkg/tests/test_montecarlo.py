"""Monte Carlo estimator: determinism, calibration, Wilson intervals."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdepbounds import (
    WindowModel,
    consecutive_run_model,
    estimate_union,
    union_prob,
    wilson_interval,
)


def flat_model(n=6, value=False):
    table = (value,) * 4
    return WindowModel(2, (0.5, 0.5), 1, table, n)


class TestWilsonInterval:
    def test_zero_successes_has_positive_upper(self):
        lo, hi = wilson_interval(0, 100)
        assert lo == 0.0
        assert hi > 0.0

    def test_all_successes_has_lower_below_one(self):
        lo, hi = wilson_interval(100, 100)
        assert hi == 1.0
        assert lo < 1.0

    @given(k=st.integers(0, 500), n=st.integers(1, 500))
    def test_interval_brackets_the_proportion(self, k, n):
        if k > n:
            return
        lo, hi = wilson_interval(k, n)
        assert 0.0 <= lo <= k / n <= hi <= 1.0

    def test_rejects_bad_counts(self):
        with pytest.raises(ValueError):
            wilson_interval(5, 0)
        with pytest.raises(ValueError):
            wilson_interval(7, 5)


class TestEstimateUnion:
    def test_impossible_event(self):
        est = estimate_union(flat_model(value=False), 1, 6, 5000, 1)
        assert est.estimate == 0.0
        assert est.ci_low == 0.0
        assert est.ci_high > 0.0

    def test_certain_event(self):
        est = estimate_union(flat_model(value=True), 1, 6, 5000, 1)
        assert est.estimate == 1.0

    def test_empty_range(self, run_model_24):
        assert estimate_union(run_model_24, 3, 2, 100, 0) == (0.0, 0.0, 0.0)

    def test_invalid_trials(self, run_model_24):
        with pytest.raises(ValueError):
            estimate_union(run_model_24, 1, 2, 0, 0)

    def test_range_validation(self, run_model_24):
        with pytest.raises(IndexError):
            estimate_union(run_model_24, 1, 25, 10, 0)

    def test_large_run_within_ci_of_exact(self, run_model_24):
        """10^6 trials on the two-event union whose exact value is 0.1875."""
        exact = union_prob(run_model_24, 1, 2)
        assert exact == pytest.approx(0.1875, abs=1e-12)
        est = estimate_union(run_model_24, 1, 2, 10 ** 6, seed=2024)
        assert est.ci_low <= exact <= est.ci_high

    def test_chunking_is_invisible(self, run_model_24):
        """Identical (model, range, trials, seed) => byte-identical output
        no matter how trials are partitioned."""
        runs = [estimate_union(run_model_24, 1, 24, 4321, 99, chunk_size=c)
                for c in (1, 7, 256, 4321, 10_000)]
        assert all(r == runs[0] for r in runs)

    def test_different_seeds_differ(self, run_model_24):
        a = estimate_union(run_model_24, 1, 24, 10_000, 1)
        b = estimate_union(run_model_24, 1, 24, 10_000, 2)
        assert a.estimate != b.estimate

    def test_seed_coverage_quick(self, run_model_24):
        """20 seeds at 2*10^4 trials: at least 17 intervals catch 0.1875."""
        hits = sum(
            1 for seed in range(20)
            if (lambda e: e.ci_low <= 0.1875 <= e.ci_high)(
                estimate_union(run_model_24, 1, 2, 20_000, seed))
        )
        assert hits >= 17

    def test_skewed_distribution_calibration(self):
        model = WindowModel(3, (0.7, 0.2, 0.1), 1,
                            tuple(bool(i % 3 == 1) for i in range(9)), 10)
        exact = union_prob(model, 1, 10)
        est = estimate_union(model, 1, 10, 200_000, seed=5)
        assert est.ci_low <= exact <= est.ci_high
