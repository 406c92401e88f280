"""Finite families of events with a declared dependence range m.

Two representations are supported:

* :class:`ExplicitEventFamily` lists every atomic outcome with its weight
  and every event as a subset of outcomes.  All queries reduce to weighted
  sweeps over the outcome space, so everything is exact.
* :class:`WindowModel` draws an i.i.d. symbol stream and fires event k
  exactly when a fixed predicate holds on the window of symbols
  k..k+m.  Events whose indices differ by more than m read disjoint
  symbols, so the family is m-dependent by construction.

Event indices are 1-based throughout the public API (events A_1..A_N);
outcome and symbol indices are 0-based.  The dependence range stored on a
family is a *claim*: nothing here assumes it holds, and
:func:`mdepbounds.dependence.check_m_dependence` can test it.

All types are immutable after construction and all operations are pure
functions of their inputs, so concurrent readers need no locking.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import CapExceededError

#: Allowed deviation of total input mass from 1.  Inputs inside this band
#: are renormalized to machine-exact unit mass so that complementary
#: queries agree to ~1e-15 instead of only to the input tolerance.
MASS_TOL = 1e-9

#: Largest joint-window enumeration attempted by pair_prob before falling
#: back to the dynamic-programming oracle.
_ENUM_CAP = 1 << 22


@dataclass(frozen=True, eq=False)
class ExplicitEventFamily:
    """Events over an explicit finite outcome space.

    Attributes:
      outcome_weights: probability of each atomic outcome, shape (M,).
        Validated nonnegative and summing to 1 within MASS_TOL, then
        renormalized to machine-exact unit mass.
      event_masks: boolean matrix of shape (N, M); row k-1 marks the
        outcomes belonging to event A_k.
      m: claimed dependence range (not verified at construction).

    Prefer :meth:`from_events` when events are given as index sets.
    """

    outcome_weights: np.ndarray
    event_masks: np.ndarray
    m: int

    def __post_init__(self) -> None:
        weights = np.array(self.outcome_weights, dtype=float)
        masks = np.array(self.event_masks, dtype=bool)
        if weights.ndim != 1:
            raise ValueError("outcome_weights must be a one-dimensional sequence")
        if weights.size == 0:
            raise ValueError("outcome space must contain at least one outcome")
        if np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise ValueError("outcome_weights must be finite and nonnegative")
        total = float(weights.sum())
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(f"outcome_weights must sum to 1 within {MASS_TOL:g} "
                             f"(got {total!r})")
        if masks.ndim != 2 or masks.shape[1] != weights.size:
            raise ValueError("event_masks must have shape (n_events, n_outcomes)")
        m = operator.index(self.m)
        if m < 0:
            raise ValueError("m must be a nonnegative integer")
        weights /= total
        weights.flags.writeable = False
        masks.flags.writeable = False
        object.__setattr__(self, "outcome_weights", weights)
        object.__setattr__(self, "event_masks", masks)
        object.__setattr__(self, "m", m)

    @classmethod
    def from_events(cls, outcome_weights: Sequence[float],
                    events: Sequence[Iterable[int]], m: int) -> "ExplicitEventFamily":
        """Build a family from events given as iterables of outcome indices."""
        n_outcomes = len(outcome_weights)
        masks = np.zeros((len(events), n_outcomes), dtype=bool)
        for row, event in enumerate(events):
            for idx in event:
                idx = int(idx)
                if not 0 <= idx < n_outcomes:
                    raise ValueError(f"event {row + 1}: outcome index {idx} "
                                     f"outside [0, {n_outcomes})")
                masks[row, idx] = True
        return cls(np.asarray(outcome_weights, dtype=float), masks, m)

    @property
    def n_events(self) -> int:
        return self.event_masks.shape[0]

    @property
    def n_outcomes(self) -> int:
        return self.outcome_weights.size

    @property
    def events(self) -> tuple[tuple[int, ...], ...]:
        """Events as sorted tuples of outcome indices (JSON-friendly view)."""
        return tuple(tuple(int(i) for i in np.nonzero(row)[0])
                     for row in self.event_masks)

    @cached_property
    def event_probs(self) -> np.ndarray:
        """P(A_k) for k = 1..N, as a read-only vector of length N."""
        probs = self.event_masks @ self.outcome_weights
        probs.flags.writeable = False
        return probs

    def __repr__(self) -> str:  # keep reprs small; masks can be huge
        return (f"ExplicitEventFamily(n_events={self.n_events}, "
                f"n_outcomes={self.n_outcomes}, m={self.m})")


@dataclass(frozen=True)
class WindowModel:
    """Windowed predicate events over an i.i.d. symbol stream.

    Symbols X_1, X_2, ... are drawn i.i.d. from ``symbol_dist`` over the
    alphabet {0, .., s-1}.  Event A_k (k = 1..horizon) fires when the
    predicate holds on the window (X_k, ..., X_{k+m}).

    Predicate indexing is normative and bit-exact: the table entry for a
    window is sum(x_t * s**t for t in 0..m) where offset t = 0 is the
    leftmost (earliest) symbol, i.e. the earliest symbol is the
    least-significant digit.

    ``symbol_dist`` is validated to sum to 1 within MASS_TOL and stored
    renormalized.
    """

    alphabet_size: int
    symbol_dist: tuple[float, ...]
    m: int
    predicate_table: tuple[bool, ...]
    horizon: int

    def __post_init__(self) -> None:
        s = operator.index(self.alphabet_size)
        m = operator.index(self.m)
        horizon = operator.index(self.horizon)
        if s < 2:
            raise ValueError("alphabet_size must be an integer >= 2")
        if m < 0:
            raise ValueError("m must be a nonnegative integer")
        if horizon < 0:
            raise ValueError("horizon must be a nonnegative integer")
        dist = tuple(float(p) for p in self.symbol_dist)
        if len(dist) != s:
            raise ValueError(f"symbol_dist must have length {s} (got {len(dist)})")
        if any(p < 0 or not math.isfinite(p) for p in dist):
            raise ValueError("symbol_dist entries must be finite and nonnegative")
        total = sum(dist)
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(f"symbol_dist must sum to 1 within {MASS_TOL:g} "
                             f"(got {total!r})")
        dist = tuple(p / total for p in dist)
        table = tuple(bool(b) for b in self.predicate_table)
        if len(table) != s ** (m + 1):
            raise ValueError(f"predicate_table must have length "
                             f"{s ** (m + 1)} = alphabet_size**(m+1) "
                             f"(got {len(table)})")
        object.__setattr__(self, "alphabet_size", s)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "horizon", horizon)
        object.__setattr__(self, "symbol_dist", dist)
        object.__setattr__(self, "predicate_table", table)

    @property
    def n_events(self) -> int:
        return self.horizon

    @cached_property
    def dist_array(self) -> np.ndarray:
        arr = np.array(self.symbol_dist, dtype=float)
        arr.flags.writeable = False
        return arr

    @cached_property
    def table_array(self) -> np.ndarray:
        arr = np.array(self.predicate_table, dtype=bool)
        arr.flags.writeable = False
        return arr

    @cached_property
    def window_weights(self) -> np.ndarray:
        """Probability of each window under the i.i.d. symbol law."""
        w = np.ones(1)
        for _ in range(self.m + 1):
            w = np.kron(self.dist_array, w)  # append the next (later) symbol
        w.flags.writeable = False
        return w

    @cached_property
    def single_event_prob(self) -> float:
        """P(A_k); identical for every k by stationarity."""
        return float(self.window_weights[self.table_array].sum())

    @cached_property
    def _gap_probs(self) -> dict[int, float]:
        return {}

    def pair_gap_prob(self, gap: int) -> float:
        """P(A_k and A_{k+gap}); depends only on the gap by stationarity."""
        if gap < 0:
            raise ValueError("gap must be nonnegative")
        if gap == 0:
            return self.single_event_prob
        if gap > self.m:
            return self.single_event_prob ** 2  # disjoint windows: exact product
        cached = self._gap_probs.get(gap)
        if cached is not None:
            return cached
        value = self._overlapping_pair_prob(gap)
        self._gap_probs[gap] = value
        return value

    def _overlapping_pair_prob(self, gap: int) -> float:
        s, m = self.alphabet_size, self.m
        span = gap + m + 1
        if s ** span <= _ENUM_CAP:
            flat = np.arange(s ** span)
            weight = np.ones(s ** span)
            for t in range(span):
                weight *= self.dist_array[(flat // s ** t) % s]
            table = self.table_array
            first = table[flat % s ** (m + 1)]
            second = table[(flat // s ** gap) % s ** (m + 1)]
            return float(weight[first & second].sum())
        # Span too wide to enumerate: inclusion-exclusion on the DP oracle.
        from .oracle import complement_intersection_prob
        both_clear = complement_intersection_prob(
            _shifted_copy(self, gap), (1, 1 + gap))
        return max(0.0, 2 * self.single_event_prob - 1 + both_clear)


def _shifted_copy(model: WindowModel, gap: int) -> WindowModel:
    """Same model with the horizon extended to cover index 1 + gap."""
    if model.horizon >= 1 + gap:
        return model
    return WindowModel(model.alphabet_size, model.symbol_dist, model.m,
                       model.predicate_table, 1 + gap)


Family = Union[ExplicitEventFamily, WindowModel]


def _require_event_index(family: Family, k: int, name: str = "k") -> int:
    k = operator.index(k)
    if not 1 <= k <= family.n_events:
        raise IndexError(f"{name}={k} outside the event range 1..{family.n_events}")
    return k


def event_prob(family: Family, k: int) -> float:
    """Exact P(A_k) for 1 <= k <= N."""
    k = _require_event_index(family, k)
    if isinstance(family, WindowModel):
        return family.single_event_prob
    return float(family.event_probs[k - 1])


def pair_prob(family: Family, i: int, j: int) -> float:
    """Exact P(A_i and A_j) for 1 <= i, j <= N.

    Window models enumerate the span of symbols read by both windows
    (at most 2(m+1) of them); indices further than m apart factorize
    into an exact product of the marginals.
    """
    i = _require_event_index(family, i, "i")
    j = _require_event_index(family, j, "j")
    if isinstance(family, WindowModel):
        return family.pair_gap_prob(abs(j - i))
    if i == j:
        return float(family.event_probs[i - 1])
    joint = family.event_masks[i - 1] & family.event_masks[j - 1]
    return float(family.outcome_weights[joint].sum())


def partial_sum(family: Family, upto: int) -> float:
    """Sum of P(A_k) for k = 1..upto; 0 for upto = 0."""
    upto = operator.index(upto)
    if not 0 <= upto <= family.n_events:
        raise ValueError(f"upto={upto} outside 0..{family.n_events}")
    if isinstance(family, WindowModel):
        return upto * family.single_event_prob
    return float(family.event_probs[:upto].sum())


def total_mass(family: Family) -> float:
    """Total event mass: sum of P(A_k) over all N events."""
    return partial_sum(family, family.n_events)


def t_local(family: Family) -> float:
    """Sum of P(A_i and A_j) over pairs i < j with j - i <= m - 1.

    Defined for m >= 1 only; the pair range is empty for m = 1, so the
    value is exactly 0 there.
    """
    m = family.m
    if m == 0:
        raise ValueError("t_local requires a dependence range m >= 1")
    n = family.n_events
    if m == 1 or n <= 1:
        return 0.0
    if isinstance(family, WindowModel):
        return float(sum((n - d) * family.pair_gap_prob(d)
                         for d in range(1, m) if d < n))
    total = 0.0
    for i in range(1, n):
        for j in range(i + 1, min(i + m - 1, n) + 1):
            total += pair_prob(family, i, j)
    return total


def expand_window_model(model: WindowModel,
                        max_outcomes: int = 1 << 20) -> ExplicitEventFamily:
    """Expand a window model into an explicit family over all symbol strings.

    This is the cross-representation oracle used in tests: the outcome
    space is every string in {0..s-1}^(N+m) with its product weight, and
    event k collects the strings whose k-th window fires.  Guarded by the
    size cap s**(N+m) <= max_outcomes.
    """
    s, m, n = model.alphabet_size, model.m, model.horizon
    length = n + m
    n_strings = s ** length
    if n_strings > max_outcomes:
        raise CapExceededError(
            f"expansion needs {s}**{length} = {n_strings} outcomes, "
            f"above the cap of {max_outcomes}")
    flat = np.arange(n_strings)
    weights = np.ones(n_strings)
    for t in range(length):
        weights *= model.dist_array[(flat // s ** t) % s]
    masks = np.zeros((n, n_strings), dtype=bool)
    for k in range(1, n + 1):
        widx = (flat // s ** (k - 1)) % s ** (m + 1)
        masks[k - 1] = model.table_array[widx]
    return ExplicitEventFamily(weights, masks, model.m)
