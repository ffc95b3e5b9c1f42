"""Exhaustive iteration and counting over anonymous three-candidate profiles.

The scan behind the irresoluteness figures is exact integer arithmetic end to
end: all ``C(n+5, 5)`` anonymous profiles with ``n`` voters are visited, the
pairwise margins are computed in blocked numpy batches, and fractions are
rendered to decimals only at the output boundary.

Two access paths are provided:

* :class:`ProfileCursor` — a deterministic colexicographic stream of count
  vectors with ``rank``/``unrank`` support so the range can be split into
  contiguous sub-ranges for parallel work (used by the scalar paths and by
  any caller that needs the canonical profile order).
* :func:`irresoluteness` — blocked, vectorised counting.  Margin-determined
  rules are evaluated straight from the margin matrix; rules without a
  hand-written kernel fall back to a lookup table keyed by margin triple.
"""

from __future__ import annotations

import functools
import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from . import rules as _rules
from .core import (
    ORDER_MARGIN_VECTOR,
    ORDER_RANKING,
    PERMUTATIONS,
    Profile,
    mcgarvey,
    permute_profile,
)

#: Environment variable consulted for the default worker count.
WORKERS_ENV_VAR = "TRIVOTE_WORKERS"

CSV_HEADER = "n,rule,irresolute,total,fraction"

#: Rules whose frequency curves leave out the completely tied profiles.
#:
#: On a profile where every pairwise margin is zero, every anonymous neutral
#: rule returns all three candidates, so such ties say nothing about the rule
#: itself.  The reference curves for the maximin family exclude them (the
#: black curve does not); :func:`irresoluteness` applies the same defaults.
EXCLUDE_ALL_TIED = ("maximin", "nanson", "leximin")


def profile_count(n: int) -> int:
    """Number of anonymous profiles with exactly ``n`` voters."""
    if n < 0:
        raise ValueError(f"voter count must be non-negative, got {n}")
    return math.comb(n + 5, 5)


def all_tied_count(n: int) -> int:
    """Number of ``n``-voter profiles whose margins all vanish.

    The margins are zero exactly when each order appears as often as its
    reverse, so the count is the number of ways to split ``n/2`` voters over
    the three reverse pairs; for odd ``n`` there are none (parity).
    """
    return math.comb(n // 2 + 2, 2) if n % 2 == 0 else 0


# ---------------------------------------------------------------------------
# Colexicographic cursor
# ---------------------------------------------------------------------------
#
# Profiles with a fixed voter total are ordered colexicographically: compare
# the count of cba first, then cab, and so on down to abc.  The first profile
# is (n,0,0,0,0,0) and the last is (0,0,0,0,0,n).


def colex_successor(profile: Profile) -> Optional[Profile]:
    """The next count vector in colexicographic order, or None at the end."""
    counts = list(profile)
    if counts[0] > 0:
        counts[0] -= 1
        counts[1] += 1
        return tuple(counts)
    for j in range(1, 6):
        if counts[j] > 0:
            if j == 5:
                return None
            counts[0] = counts[j] - 1
            counts[j] = 0
            counts[j + 1] += 1
            return tuple(counts)
    return None


def profile_rank(profile: Profile) -> int:
    """Zero-based position of ``profile`` in the colex order for its total."""
    rank = 0
    mass = profile[0]
    for j in range(1, 6):
        mass += profile[j]
        # Profiles that agree above index j but carry less weight at j come
        # earlier; the hockey-stick identity collapses the sum over their
        # possible j-counts.
        rank += math.comb(mass + j, j) - math.comb(mass - profile[j] + j, j)
    return rank


def profile_unrank(n: int, rank: int) -> Profile:
    """Inverse of :func:`profile_rank` for profiles with ``n`` voters."""
    if not 0 <= rank < profile_count(n):
        raise ValueError(f"rank {rank} out of range for {n} voters")
    counts = [0] * 6
    mass = n
    remaining = rank
    for j in range(5, 0, -1):
        value = 0
        while True:
            below = math.comb(mass + j, j) - math.comb(mass - value + j, j)
            if below <= remaining:
                break
            value -= 1  # pragma: no cover - loop below never overshoots
        # Walk value upward until the block containing `remaining` is found.
        while (
            value < mass
            and math.comb(mass + j, j) - math.comb(mass - value - 1 + j, j)
            <= remaining
        ):
            value += 1
        remaining -= math.comb(mass + j, j) - math.comb(mass - value + j, j)
        counts[j] = value
        mass -= value
    counts[0] = mass
    return tuple(counts)


@dataclass(frozen=True)
class ProfileCursor:
    """A contiguous colex range of anonymous profiles with ``n`` voters.

    ``start`` and ``stop`` are colex ranks (``stop`` exclusive); the default
    cursor covers the full range.  Iteration yields plain count tuples.
    """

    n: int
    start: int = 0
    stop: Optional[int] = None

    def __post_init__(self) -> None:
        total = profile_count(self.n)
        stop = total if self.stop is None else self.stop
        if not 0 <= self.start <= stop <= total:
            raise ValueError(
                f"invalid cursor range [{self.start}, {stop}) for n={self.n}"
            )
        object.__setattr__(self, "stop", stop)

    def __len__(self) -> int:
        return self.stop - self.start  # type: ignore[operator]

    def __iter__(self) -> Iterator[Profile]:
        remaining = len(self)
        if remaining == 0:
            return
        profile: Optional[Profile] = profile_unrank(self.n, self.start)
        while remaining and profile is not None:
            yield profile
            remaining -= 1
            profile = colex_successor(profile)

    def split(self, k: int) -> list["ProfileCursor"]:
        """Split into ``k`` contiguous sub-cursors of near-equal length."""
        if k < 1:
            raise ValueError(f"cannot split into {k} parts")
        size, extra = divmod(len(self), k)
        parts = []
        lo = self.start
        for i in range(k):
            hi = lo + size + (1 if i < extra else 0)
            parts.append(ProfileCursor(self.n, lo, hi))
            lo = hi
        return parts


def enumerate_profiles(n: int) -> Iterator[Profile]:
    """All anonymous profiles with ``n`` voters in colex order."""
    return iter(ProfileCursor(n))


def profiles_up_to(bound: int, min_n: int = 1) -> Iterator[Profile]:
    """All profiles with ``min_n <= n <= bound``, ordered by (n, colex)."""
    for n in range(min_n, bound + 1):
        yield from ProfileCursor(n)


# ---------------------------------------------------------------------------
# Blocked counting
# ---------------------------------------------------------------------------

_V = np.array(ORDER_MARGIN_VECTOR, dtype=np.int64)  # (6, 3) order -> margins


@functools.lru_cache(maxsize=32)
def _compositions4(m: int) -> np.ndarray:
    """All compositions of ``m`` into 4 ordered parts, shape (C(m+3,3), 4)."""
    rows = []
    for c3 in range(m + 1):
        for c2 in range(m - c3 + 1):
            for c1 in range(m - c3 - c2 + 1):
                rows.append((m - c3 - c2 - c1, c1, c2, c3))
    return np.asarray(rows, dtype=np.int64).reshape(-1, 4)


def _blocks(n: int) -> Iterator[tuple[int, int, int]]:
    """Block coordinates (m, c4, c5) with m = n - c4 - c5.

    Blocks are grouped by m so consecutive blocks share one cached
    composition template; within a block the first four counts range over
    all compositions of m.
    """
    for s in range(n + 1):
        for c5 in range(s + 1):
            yield n - s, s - c5, c5


def _block_margins(template: np.ndarray, c4: int, c5: int) -> np.ndarray:
    return template @ _V[:4] + c4 * _V[4] + c5 * _V[5]


# --- margin kernels: boolean "irresolute" flags per row --------------------


def _ties_at_max(*scores: np.ndarray) -> np.ndarray:
    best = scores[0]
    for s in scores[1:]:
        best = np.maximum(best, s)
    count = sum((s == best).astype(np.int8) for s in scores)
    return count >= 2


def _borda_columns(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return m[:, 0] + m[:, 1], m[:, 2] - m[:, 0], -m[:, 1] - m[:, 2]


def _kernel_maximin(m: np.ndarray) -> np.ndarray:
    sa = np.minimum(m[:, 0], m[:, 1])
    sb = np.minimum(-m[:, 0], m[:, 2])
    sc = np.minimum(-m[:, 1], -m[:, 2])
    return _ties_at_max(sa, sb, sc)


def _kernel_leximin(m: np.ndarray, n: int) -> np.ndarray:
    # Encode each candidate's ascending margin pair (lo, hi) as one key that
    # sorts lexicographically; leximin is irresolute iff the best key ties.
    step = 2 * n + 1
    keys = []
    for first, second in (
        (m[:, 0], m[:, 1]),
        (-m[:, 0], m[:, 2]),
        (-m[:, 1], -m[:, 2]),
    ):
        lo = np.minimum(first, second)
        hi = np.maximum(first, second)
        keys.append(lo * step + hi)
    return _ties_at_max(*keys)


def _condorcet_winner_exists(m: np.ndarray) -> np.ndarray:
    return (
        ((m[:, 0] > 0) & (m[:, 1] > 0))
        | ((m[:, 0] < 0) & (m[:, 2] > 0))
        | ((m[:, 1] < 0) & (m[:, 2] < 0))
    )


def _kernel_black(m: np.ndarray) -> np.ndarray:
    return ~_condorcet_winner_exists(m) & _ties_at_max(*_borda_columns(m))


def _kernel_borda(m: np.ndarray) -> np.ndarray:
    return _ties_at_max(*_borda_columns(m))


def _kernel_copeland(m: np.ndarray) -> np.ndarray:
    sgn_ab, sgn_ac, sgn_bc = np.sign(m[:, 0]), np.sign(m[:, 1]), np.sign(m[:, 2])
    return _ties_at_max(sgn_ab + sgn_ac, sgn_bc - sgn_ab, -sgn_ac - sgn_bc)


def _kernel_nanson(m: np.ndarray) -> np.ndarray:
    ba, bb, bc = _borda_columns(m)
    all_zero = (ba == 0) & (bb == 0) & (bc == 0)
    npos = (ba > 0).astype(np.int8) + (bb > 0) + (bc > 0)
    # With two positive scores the negative candidate is deleted and the
    # outcome hinges on the survivors' head-to-head margin.
    pair_margin = np.where(
        (ba > 0) & (bb > 0), m[:, 0], np.where((ba > 0) & (bc > 0), m[:, 1], m[:, 2])
    )
    return all_zero | ((npos == 2) & (pair_margin == 0))


def _kernel_strict_nanson(m: np.ndarray) -> np.ndarray:
    ba, bb, bc = _borda_columns(m)
    all_zero = (ba == 0) & (bb == 0) & (bc == 0)
    nneg = (ba < 0).astype(np.int8) + (bb < 0) + (bc < 0)
    # With exactly one negative score that candidate is deleted and the
    # survivors tie iff their head-to-head margin vanishes.
    pair_margin = np.where(
        bc < 0, m[:, 0], np.where(bb < 0, m[:, 1], m[:, 2])
    )
    return all_zero | ((nneg == 1) & (pair_margin == 0))


_MARGIN_KERNELS: dict[str, Callable[[np.ndarray, int], np.ndarray]] = {
    "maximin": lambda m, n: _kernel_maximin(m),
    "leximin": _kernel_leximin,
    "black": lambda m, n: _kernel_black(m),
    "borda": lambda m, n: _kernel_borda(m),
    "copeland": lambda m, n: _kernel_copeland(m),
    "nanson": lambda m, n: _kernel_nanson(m),
    "strict_nanson": lambda m, n: _kernel_strict_nanson(m),
}


# --- positional kernels (need the count columns, not just margins) ---------


def _scoring_points(vector: Sequence[Fraction]) -> np.ndarray:
    """Integer points-per-(order, candidate) matrix for a scoring vector."""
    scale = math.lcm(*(f.denominator for f in vector))
    scaled = [int(f * scale) for f in vector]
    points = np.zeros((6, 3), dtype=np.int64)
    for order, ranking in enumerate(ORDER_RANKING):
        for position, candidate in enumerate(ranking):
            points[order, candidate] = scaled[position]
    return points


def _positional_irresolute(
    template: np.ndarray, c4: int, c5: int, points: np.ndarray
) -> np.ndarray:
    scores = template @ points[:4]
    scores = scores + c4 * points[4] + c5 * points[5]
    return _ties_at_max(scores[:, 0], scores[:, 1], scores[:, 2])


def _artificial_irresolute(
    template: np.ndarray, c4: int, c5: int, margins_block: np.ndarray, n: int
) -> np.ndarray:
    table = _rules.artificial_table(n)
    points = np.zeros((6, 3), dtype=np.int64)
    for order, (top_points, second_points) in enumerate(table):
        ranking = ORDER_RANKING[order]
        points[order, ranking[0]] = top_points
        points[order, ranking[1]] = second_points
    scores = template @ points[:4] + c4 * points[4] + c5 * points[5]

    m = margins_block
    sa = np.minimum(m[:, 0], m[:, 1])
    sb = np.minimum(-m[:, 0], m[:, 2])
    sc = np.minimum(-m[:, 1], -m[:, 2])
    best = np.maximum(sa, np.maximum(sb, sc))
    masked = [
        np.where(s == best, scores[:, c], np.int64(-1))
        for c, s in enumerate((sa, sb, sc))
    ]
    top = np.maximum(masked[0], np.maximum(masked[1], masked[2]))
    count = sum((col == top).astype(np.int8) for col in masked)
    return count >= 2


# --- margin lookup table for everything else --------------------------------


class _MarginTable:
    """Caches ``|f| >= 2`` per margin triple for a margin-determined rule."""

    def __init__(self, rule_id: str, n: int):
        self._rule_id = rule_id
        self._base = 2 * n + 1
        self._offset = n
        self._cache: dict[int, bool] = {}
        self._lock = threading.Lock()

    def _lookup(self, key: int) -> bool:
        base, offset = self._base, self._offset
        m_bc = key % base - offset
        m_ac = key // base % base - offset
        m_ab = key // (base * base) - offset
        triple = (m_ab, m_ac, m_bc)
        # mcgarvey((0,0,0)) is the empty profile; use a two-voter tie instead.
        profile = mcgarvey(triple) if any(triple) else (1, 0, 0, 0, 0, 1)
        return len(_rules.evaluate_uncached(self._rule_id, profile)) >= 2

    def irresolute(self, margins_block: np.ndarray) -> np.ndarray:
        base, offset = self._base, self._offset
        keys = (
            (margins_block[:, 0] + offset) * base * base
            + (margins_block[:, 1] + offset) * base
            + (margins_block[:, 2] + offset)
        )
        unique, inverse = np.unique(keys, return_inverse=True)
        values = np.empty(unique.shape, dtype=bool)
        with self._lock:
            for i, key in enumerate(unique.tolist()):
                cached = self._cache.get(key)
                if cached is None:
                    cached = self._lookup(key)
                    self._cache[key] = cached
                values[i] = cached
        return values[inverse]


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class FrequencyRow:
    """One data point of the irresoluteness-frequency figure."""

    n: int
    rule: str
    irresolute: int
    total: int

    def __post_init__(self) -> None:
        if not 0 <= self.irresolute <= self.total:
            raise ValueError(f"count {self.irresolute} outside [0, {self.total}]")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.irresolute, self.total)

    def fraction_str(self) -> str:
        exact = Decimal(self.irresolute) / Decimal(self.total)
        return str(exact.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))

    def csv(self) -> str:
        return f"{self.n},{self.rule},{self.irresolute},{self.total},{self.fraction_str()}"


def _scalar_irresolute_count(rule_id: str, cursor: ProfileCursor) -> int:
    return sum(
        1 for profile in cursor if len(_rules.evaluate_uncached(rule_id, profile)) >= 2
    )


def irresoluteness(
    rule_id: str,
    n: int,
    workers: Optional[int] = None,
    exclude_all_tied: Optional[bool] = None,
) -> FrequencyRow:
    """Exact count of ``n``-voter profiles on which the rule is irresolute.

    ``exclude_all_tied`` controls whether completely tied profiles (all
    margins zero) are left out of the count; the default follows the
    per-rule convention of :data:`EXCLUDE_ALL_TIED`.
    """
    if n < 1:
        raise ValueError(f"voter count must be positive, got {n}")
    total = profile_count(n)
    resolved = _rules.RULE_ALIASES.get(rule_id, rule_id)
    if exclude_all_tied is None:
        exclude_all_tied = resolved in EXCLUDE_ALL_TIED
    # Completely tied profiles make every implemented rule irresolute, so
    # excluding them is a closed-form subtraction rather than a scan filter.
    tied = all_tied_count(n) if exclude_all_tied else 0

    if rule_id in ("dodgson", "young"):
        # Search-tree rules have no margin kernel and a small voter bound;
        # a scalar sweep over the cursor is instant at that scale.
        count = _scalar_irresolute_count(rule_id, ProfileCursor(n))
        return FrequencyRow(n, rule_id, count - tied, total)
    if resolved.startswith("scoring:"):
        points = _scoring_points(_rules.parse_scoring_id(resolved))
        block_flags = lambda t, c4, c5, m: _positional_irresolute(t, c4, c5, points)
    elif resolved == "plurality":
        points = _scoring_points(_rules.PLURALITY_VECTOR)
        block_flags = lambda t, c4, c5, m: _positional_irresolute(t, c4, c5, points)
    elif resolved == "artificial":
        block_flags = lambda t, c4, c5, m: _artificial_irresolute(t, c4, c5, m, n)
    elif resolved in _MARGIN_KERNELS:
        kernel = _MARGIN_KERNELS[resolved]
        block_flags = lambda t, c4, c5, m: kernel(m, n)
    elif resolved in _rules.PAIRWISE_RULE_IDS:
        table = _MarginTable(resolved, n)
        block_flags = lambda t, c4, c5, m: table.irresolute(m)
    else:
        raise _rules.UnsupportedRuleError(f"unknown rule id: {rule_id!r}")

    def scan_block(coords: tuple[int, int, int]) -> int:
        m_total, c4, c5 = coords
        template = _compositions4(m_total)
        margins_block = _block_margins(template, c4, c5)
        return int(np.count_nonzero(block_flags(template, c4, c5, margins_block)))

    coords = list(_blocks(n))
    worker_total = min(_worker_count(workers), len(coords))
    if worker_total <= 1:
        count = sum(scan_block(c) for c in coords)
    else:
        with ThreadPoolExecutor(max_workers=worker_total) as pool:
            count = sum(pool.map(scan_block, coords))
    return FrequencyRow(n, rule_id, count - tied, total)


def irresoluteness_via_orbits(
    rule_id: str, n: int, exclude_all_tied: Optional[bool] = None
) -> FrequencyRow:
    """Recount by scanning one representative per relabelling orbit.

    Each profile is counted through the lexicographically least member of its
    orbit under candidate permutations, weighted by the orbit size.  For a
    neutral rule this must reproduce :func:`irresoluteness` exactly.
    """
    resolved = _rules.RULE_ALIASES.get(rule_id, rule_id)
    if exclude_all_tied is None:
        exclude_all_tied = resolved in EXCLUDE_ALL_TIED
    count = 0
    for profile in ProfileCursor(n):
        orbit = {permute_profile(profile, sigma) for sigma in PERMUTATIONS}
        if profile == min(orbit):
            if len(_rules.evaluate(rule_id, profile)) >= 2:
                count += len(orbit)
    tied = all_tied_count(n) if exclude_all_tied else 0
    return FrequencyRow(n, rule_id, count - tied, profile_count(n))


# ---------------------------------------------------------------------------
# Witness search
# ---------------------------------------------------------------------------


def search(
    predicate: Callable[[Profile], bool],
    bound: int,
    mode: str = "first",
) -> list[Profile]:
    """Profiles with ``1 <= n <= bound`` satisfying a pure predicate.

    Profiles are visited by voter count and then in colex order, so the
    witness list is deterministic; ``mode="first"`` short-circuits at the
    first hit.
    """
    if mode not in ("first", "all"):
        raise ValueError(f"unknown search mode: {mode!r}")
    hits: list[Profile] = []
    for profile in profiles_up_to(bound):
        if predicate(profile):
            hits.append(profile)
            if mode == "first":
                break
    return hits
