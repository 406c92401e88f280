#!/usr/bin/env python3
"""The windowed rate form of the union bound.

Once prefix event masses reach n somewhere, the minimal threshold
function pins down index windows {i+1 .. threshold(i+n)} that each carry
mass at least n, and every such window obeys the uniform lower bound
1 - exp(-n/(m+1)) regardless of where it starts.  On the run model each
unit of mass takes 8 events, so the thresholds land at 8, 16, 24.
"""

from mdepbounds import (
    build_threshold,
    consecutive_run_model,
    union_prob,
    windowed_bound,
)

model = consecutive_run_model(24)
phi = build_threshold(model)
print(f"total event mass = {phi.total_mass}")
print(f"thresholds: " + ", ".join(
    f"phi({n}) = {phi(n)}" for n in range(1, phi.max_n + 1)))
print()

print("== every valid window beats its bound ==")
print(f"{'i':>3} {'n':>3} {'window':>10} {'mass':>6} {'bound':>9} "
      f"{'exact':>9}")
for i in range(phi.max_n):
    for n in range(1, phi.max_n - i + 1):
        wb = windowed_bound(model, phi, i, n)
        exact = union_prob(model, wb.first, wb.last)
        print(f"{i:>3} {n:>3} {f'[{wb.first},{wb.last}]':>10} "
              f"{wb.mass:>6.3f} {wb.bound:>9.6f} {exact:>9.6f}")
print()

print("== asking for more mass than exists fails with the deficit ==")
try:
    windowed_bound(model, phi, 8, 1)
except ValueError as exc:
    print(f"  ValueError: {exc}")
print()

# A longer horizon makes more windows available; the bound for fixed n
# stays put while the windows shift right.
long_model = consecutive_run_model(96)
phi_long = build_threshold(long_model)
print(f"== horizon 96: mass {phi_long.total_mass}, "
      f"{phi_long.max_n} windows of unit mass ==")
for i in (0, 3, 7, 11):
    wb = windowed_bound(long_model, phi_long, i, 1)
    print(f"  skip {i:>2}: window [{wb.first:>3},{wb.last:>3}], "
          f"bound {wb.bound:.6f}, exact "
          f"{union_prob(long_model, wb.first, wb.last):.6f}")
