"""Degree-counting identities over decks and their consequences.

The central identity expresses the deck-side degree-occurrence total
phi(j) through the graph-side degree counts a_i:

    phi(j) = sum_{i=j}^{j+l} a_i * C(i, j) * C(n-1-i, k-1-j),   l = n - k

with the convention C(p, q) = 0 whenever q < 0 or q > p.  The cutoff is
load-bearing: a vertex of degree i > l + j has too few non-neighbors to
appear with degree exactly j on any card.  Back-substituting from
j = k-1 down to 0 recovers the full degree count vector from a deck once
the counts of degrees >= k are supplied.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from .decks import Deck, phi_vector
from .graphs import Graph, degree_counts


class InconsistentCountsError(ValueError):
    """The deck is not realizable under the supplied high-degree counts."""


def binom(p: int, q: int) -> int:
    """C(p, q) with the explicit out-of-range-is-zero convention."""
    if q < 0 or p < 0 or q > p:
        return 0
    return math.comb(p, q)


def _check_ranges(n: int, k: int, j: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"card size {k} out of range for n={n}")
    if not 0 <= j <= k - 1:
        raise ValueError(f"degree {j} out of range for card size {k}")


def phi_formula(counts: Sequence[int], n: int, k: int, j: int) -> int:
    """Formula-side phi(j) evaluated from degree counts a_0..a_{n-1}."""
    _check_ranges(n, k, j)
    if len(counts) != n:
        raise ValueError(f"expected {n} degree counts, got {len(counts)}")
    if any(c < 0 for c in counts) or sum(counts) != n:
        raise ValueError(f"degree counts {tuple(counts)} do not describe {n} vertices")
    l = n - k
    return sum(
        counts[i] * binom(i, j) * binom(n - 1 - i, k - 1 - j)
        for i in range(j, j + l + 1)
    )


def reconstruct_degree_list(
    deck: Deck, n: int, high_counts: Mapping[int, int]
) -> tuple[int, ...]:
    """Recover the degree count vector of a deck's realizations.

    ``high_counts`` must give a_i for every i in [k, n-1]; the low
    counts are then forced one at a time by solving the counting
    identity for a_j, descending from j = k-1.  The result is the unique
    vector consistent with the deck *under those high counts*; different
    consistent high counts can yield different (equally valid) answers.

    Raises :class:`InconsistentCountsError` when any solved count comes
    out negative or fractional, or the final vector is not a degree
    count vector of an n-vertex graph.
    """
    k = deck.card_size
    if deck.origin_order != n:
        raise ValueError(f"deck has origin order {deck.origin_order}, expected {n}")
    missing = [i for i in range(k, n) if i not in high_counts]
    if missing:
        raise ValueError(f"high_counts missing degrees {missing}")
    stray = [i for i in high_counts if not k <= i < n]
    if stray:
        raise ValueError(f"high_counts has degrees {stray} outside [{k}, {n - 1}]")
    if any(high_counts[i] < 0 for i in range(k, n)):
        raise ValueError("high-degree counts must be nonnegative")

    phi = phi_vector(deck)
    counts = [0] * n
    for i in range(k, n):
        counts[i] = high_counts[i]
    l = n - k
    for j in range(k - 1, -1, -1):
        known = sum(
            counts[i] * binom(i, j) * binom(n - 1 - i, k - 1 - j)
            for i in range(j + 1, j + l + 1)
        )
        coeff = binom(n - 1 - j, k - 1 - j)
        remainder = phi[j] - known
        if remainder < 0 or remainder % coeff:
            raise InconsistentCountsError(
                f"inconsistent high-degree counts: solving for the count of "
                f"degree-{j} vertices gives {remainder}/{coeff}"
            )
        counts[j] = remainder // coeff
    if sum(counts) != n or sum(i * c for i, c in enumerate(counts)) % 2:
        raise InconsistentCountsError(
            f"inconsistent high-degree counts: solved vector {tuple(counts)} "
            f"is not a degree count vector on {n} vertices"
        )
    return tuple(counts)


def reconstruct_with_zero_high(deck: Deck, n: int) -> tuple[int, ...] | None:
    """Convenience wrapper: try all-zero high counts, None if inconsistent."""
    zeros = {i: 0 for i in range(deck.card_size, n)}
    try:
        return reconstruct_degree_list(deck, n, zeros)
    except InconsistentCountsError:
        return None


def counts_to_degree_list(counts: Sequence[int]) -> tuple[int, ...]:
    """Degree count vector -> nonincreasing degree list."""
    out: list[int] = []
    for i in range(len(counts) - 1, -1, -1):
        out.extend([i] * counts[i])
    return tuple(out)


def deck_difference(g: Graph, h: Graph) -> tuple[int, ...]:
    """Componentwise degree-count difference c_i between two graphs."""
    if g.n != h.n:
        raise ValueError(f"orders differ: {g.n} vs {h.n}")
    a = degree_counts(g)
    b = degree_counts(h)
    return tuple(x - y for x, y in zip(a, b))


def phi_diff_residual(diffs: Sequence[int], n: int, k: int, j: int) -> int:
    """Signed residual of the differenced counting identity.

    Zero for every valid j whenever the two graphs behind ``diffs``
    share a k-deck.
    """
    _check_ranges(n, k, j)
    if len(diffs) != n:
        raise ValueError(f"expected {n} difference entries, got {len(diffs)}")
    l = n - k
    return sum(
        diffs[i] * binom(i, j) * binom(n - 1 - i, k - 1 - j)
        for i in range(j, j + l + 1)
    )


def incident_edge_lower_bound(t: int, s: int) -> int:
    """Edges incident to any t vertices whose degrees sum to at least s."""
    if t < 0 or s < 0:
        raise ValueError("arguments must be nonnegative")
    return max(0, s - t * (t - 1) // 2)


def degree_list_threshold(l: int) -> float:
    """Order bound g(l) above which the degree list is determined by the
    deck of cards missing l vertices.

    Only defined for l >= 3, where the denominator (l-1)*log(l) - 1 is
    positive.  This is the lone floating-point computation in the
    package.
    """
    if l < 3:
        raise ValueError(f"threshold needs l >= 3, got {l}")
    log_l = math.log(l)
    e = math.e
    return (l + log_l + 1) * (e + (e * log_l + e + 1) / ((l - 1) * log_l - 1)) + 1
