"""Audits every inequality in the derivation of the union lower bounds.

For a family claiming dependence range m, the first-order bound rests on
residue-class independence plus the product-to-exponential inequality,
and the second-order bound on shifted block partitions: 1-dependence of
block events, a per-block second-order Bonferroni lower bound, the exact
shift count for local pairs, and a parity-split averaging step.  Each
link of that chain is measured here against the exact oracle and reported
with its signed slack.

Checks run in a fixed order so reports are deterministic and diffable.
"""

from __future__ import annotations

import itertools
import math

from .bounds import first_order_bound, second_order_bound
from .errors import CapExceededError
from .families import ExplicitEventFamily, Family, WindowModel, \
    event_prob, pair_prob, partial_sum, t_local
from .oracle import block_event_prob, complement_intersection_prob, union_prob
from .partitions import pair_shift_count, residue_classes, shifted_blocks
from .reports import Check, VerificationReport

#: Feasibility caps for the exact oracle queries made here.
MAX_WINDOW_TABLE = 1 << 16
MAX_WINDOW_HORIZON = 10_000
MAX_EXPLICIT_OUTCOMES = 1 << 20


def _require_desk_scale(family: Family) -> None:
    if isinstance(family, WindowModel):
        table = len(family.predicate_table)
        if table > MAX_WINDOW_TABLE:
            raise CapExceededError(
                f"predicate table of size {table} exceeds the verifier cap "
                f"{MAX_WINDOW_TABLE}")
        if family.horizon > MAX_WINDOW_HORIZON:
            raise CapExceededError(
                f"horizon {family.horizon} exceeds the verifier cap "
                f"{MAX_WINDOW_HORIZON}")
    elif isinstance(family, ExplicitEventFamily):
        if family.n_outcomes > MAX_EXPLICIT_OUTCOMES:
            raise CapExceededError(
                f"{family.n_outcomes} outcomes exceed the verifier cap "
                f"{MAX_EXPLICIT_OUTCOMES}")


def verify_derivation(family: Family, *, tol: float = 1e-9,
                      subset_size_cap: int = 3,
                      max_triples_per_class: int = 200,
                      max_block_pairs_per_shift: int | None = None,
                      ) -> VerificationReport:
    """Check every step of the bound derivation on one family.

    Emits, in order: residue-class independence (pairs exhaustively,
    index subsets of size 3 up to `max_triples_per_class` per class when
    `subset_size_cap` >= 3); the product-to-exponential chain per class;
    block-event independence at block distance >= 2 (optionally capped);
    the per-block second-order Bonferroni lower bound; the exhaustive
    pair-shift count; the parity-split averaging chain; and finally the
    exact union against both closed-form bounds.  Block checks are
    skipped for m = 0, which has no block partition.

    Factorization checks compare joint complement probabilities against
    products of marginals (pairs plus capped triples), not full
    sigma-algebra independence, which would cost exponential work.
    """
    _require_desk_scale(family)
    n, m = family.n_events, family.m
    checks: list[Check] = []

    probs = {k: event_prob(family, k) for k in range(1, n + 1)}

    # Residue-class independence: complements of far-apart events factorize.
    classes = residue_classes(n, m).classes
    for r, cls in enumerate(classes, start=1):
        for i, j in itertools.combinations(cls, 2):
            lhs = complement_intersection_prob(family, (i, j))
            rhs = (1 - probs[i]) * (1 - probs[j])
            checks.append(Check.eq(
                f"residue_independence[r={r},({i},{j})]", lhs, rhs, tol))
        if subset_size_cap >= 3:
            triples = itertools.islice(
                itertools.combinations(cls, 3), max_triples_per_class)
            for i, j, k in triples:
                lhs = complement_intersection_prob(family, (i, j, k))
                rhs = (1 - probs[i]) * (1 - probs[j]) * (1 - probs[k])
                checks.append(Check.eq(
                    f"residue_independence[r={r},({i},{j},{k})]", lhs, rhs, tol))

    # Product-to-exponential chain per residue class.
    for r, cls in enumerate(classes, start=1):
        joint = complement_intersection_prob(family, cls)
        product = math.prod(1 - probs[k] for k in cls)
        exponential = math.exp(-sum(probs[k] for k in cls))
        checks.append(Check.le(
            f"product_chain[r={r},joint<=product]", joint, product, tol))
        checks.append(Check.le(
            f"product_chain[r={r},product<=exp]", product, exponential, tol))

    union_all = union_prob(family, 1, n)
    complement_all = 1.0 - union_all

    if m >= 1:
        partitions = [shifted_blocks(n, m, r) for r in range(m)]
        block_probs = [
            tuple(block_event_prob(family, lo, hi) for lo, hi in part.blocks)
            for part in partitions
        ]

        # Block events at distance >= 2 are independent (1-dependence).
        for part, bprobs in zip(partitions, block_probs):
            pairs = (
                (a, b)
                for a, b in itertools.combinations(range(len(part.blocks)), 2)
                if part.block_js[b] - part.block_js[a] >= 2
            )
            if max_block_pairs_per_shift is not None:
                pairs = itertools.islice(pairs, max_block_pairs_per_shift)
            for a, b in pairs:
                lo_a, hi_a = part.blocks[a]
                lo_b, hi_b = part.blocks[b]
                indices = list(range(lo_a, hi_a + 1)) + list(range(lo_b, hi_b + 1))
                lhs = complement_intersection_prob(family, indices)
                rhs = (1 - bprobs[a]) * (1 - bprobs[b])
                checks.append(Check.eq(
                    f"block_independence[r={part.shift},"
                    f"j=({part.block_js[a]},{part.block_js[b]})]",
                    lhs, rhs, tol))

        # Second-order Bonferroni inside every block:
        # P(B) >= sum P(A_i) - sum_{pairs in B} P(A_i & A_l).
        for part, bprobs in zip(partitions, block_probs):
            for (lo, hi), j, prob in zip(part.blocks, part.block_js, bprobs):
                members = range(lo, hi + 1)
                single = sum(probs[k] for k in members)
                pairsum = sum(pair_prob(family, i, l)
                              for i, l in itertools.combinations(members, 2))
                checks.append(Check.le(
                    f"block_bonferroni[r={part.shift},j={j}]",
                    single - pairsum, prob, tol))

        # The shift count for every local pair, against brute membership.
        worst_gap = 0
        for i in range(1, n + 1):
            for l in range(i + 1, min(i + m, n + 1)):
                claimed = pair_shift_count(i, l, m)
                brute = sum(
                    1 for r in range(m)
                    if (i - r - 1) // m == (l - r - 1) // m
                )
                worst_gap = max(worst_gap, abs(claimed - brute))
        checks.append(Check.eq("pair_shift_cover[exhaustive]",
                               float(worst_gap), 0.0, 0.0))

        # Parity split and averaging: complements bounded by parity
        # products, then by exponentials of half the block mass.
        for part, bprobs in zip(partitions, block_probs):
            r = part.shift
            odd = [p for p, j in zip(bprobs, part.block_js) if j % 2 == 1]
            even = [p for p, j in zip(bprobs, part.block_js) if j % 2 == 0]
            prod_odd = math.prod(1 - p for p in odd)
            prod_even = math.prod(1 - p for p in even)
            x, y = sum(odd), sum(even)
            checks.append(Check.le(
                f"parity_product[r={r},odd]", complement_all, prod_odd, tol))
            checks.append(Check.le(
                f"parity_product[r={r},even]", complement_all, prod_even, tol))
            checks.append(Check.le(
                f"parity_average[r={r}]",
                min(math.exp(-x), math.exp(-y)), math.exp(-(x + y) / 2), tol))
            checks.append(Check.le(
                f"block_mass_exponential[r={r}]",
                complement_all, math.exp(-(x + y) / 2), tol))

    # Final bounds against the exact union probability.
    s_n = partial_sum(family, n)
    checks.append(Check.le("bound_vs_exact[first_order]",
                           first_order_bound(s_n, m), union_all, tol))
    if m >= 1:
        _, b2 = second_order_bound(s_n, t_local(family), m)
        checks.append(Check.le("bound_vs_exact[second_order]",
                               b2, union_all, tol))

    return VerificationReport(tuple(checks))
