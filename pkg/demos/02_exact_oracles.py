#!/usr/bin/env python3
"""The exact oracles, and why we trust them.

Window models answer union and complement-intersection queries through a
forward DP whose state is the joint law of the last m symbols.  That DP
is checked here two independent ways: against the explicit-family sweep
after expanding the model over all symbol strings, and against algebraic
identities that must hold to machine precision.
"""

import numpy as np

from mdepbounds import (
    complement_intersection_prob,
    event_prob,
    expand_window_model,
    pair_prob,
    random_window_model,
    union_prob,
)

rng = np.random.default_rng(8)

print("== DP vs full enumeration on random small models ==")
print(f"{'s':>2} {'m':>2} {'N':>3} {'dp union':>12} {'enumerated':>12} {'diff':>9}")
for _ in range(8):
    model = random_window_model(rng, min_horizon=3, max_horizon=10)
    if model.alphabet_size ** (model.horizon + model.m) > 1 << 20:
        continue
    explicit = expand_window_model(model)  # outcome per symbol string
    a = union_prob(model, 1, model.horizon)
    b = union_prob(explicit, 1, model.horizon)
    print(f"{model.alphabet_size:>2} {model.m:>2} {model.horizon:>3} "
          f"{a:>12.9f} {b:>12.9f} {abs(a - b):>9.2e}")

print()
print("== identities that hold to machine precision ==")
model = random_window_model(rng, min_horizon=12, max_horizon=12)
u = union_prob(model, 1, 12)
c = complement_intersection_prob(model, range(1, 13))
print(f"union + complement-intersection = {u + c:.15f}  (exactly 1)")

lhs = union_prob(model, 1, 2)
rhs = event_prob(model, 1) + event_prob(model, 2) - pair_prob(model, 1, 2)
print(f"inclusion-exclusion at N=2: union {lhs:.12f} vs P1+P2-P12 {rhs:.12f}")

print()
print("== non-contiguous complement queries ==")
# P(none of A_1, A_5, A_9 fires): the DP only applies the predicate at
# member indices while sliding across the whole span.
for indices in [(1,), (1, 5), (1, 5, 9), (1, 2, 3, 4, 5)]:
    p = complement_intersection_prob(model, indices)
    print(f"  P(no event at {indices}) = {p:.9f}")
print(f"  P(empty set)           = "
      f"{complement_intersection_prob(model, ()):.1f}  (empty product)")
