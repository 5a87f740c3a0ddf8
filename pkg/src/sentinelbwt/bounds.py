"""Structural bounds on nice positions, all read off the rank permutation.

With c cycles, cycle minima l_1 < ... < l_c, L = l_c, and b the number of
bad pairs, every nice position i satisfies i >= max(L+1, 2b+c) and has
parity opposite to c; the number of nice positions is at most
min((n+1)//2, ceil((n-L+1)/2)).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm, words


@dataclass(frozen=True)
class BoundsProfile:
    n: int
    cycles: int  # c: cycle count of the rank permutation
    max_cycle_min: int  # L: largest cycle minimum
    bad_pairs: int  # b: pairs (l_j, l_j + 1) inside the same cycle, j < c
    min_nice: int  # max(L+1, 2b+c); no nice position can be smaller
    parity: str  # "odd" when c is even, "even" when c is odd
    bound_total: int  # (n+1)//2
    bound_after_min: int  # ceil((n-L+1)/2)
    max_nice: int  # tighter of the previous two


def bounds_profile(word) -> BoundsProfile:
    """All bound quantities in one pass over the canonical cycles."""
    data = words.check_word(word)
    n = len(data)
    cycles = perm.standard_permutation(data).cycles()
    c = len(cycles)
    minima = [cyc[0] for cyc in cycles]
    big_l = max(minima)
    bad = 0
    for j in range(c - 1):
        if minima[j] + 1 in cycles[j]:
            bad += 1
    bound_total = (n + 1) // 2
    bound_after_min = (n - big_l + 2) // 2
    return BoundsProfile(
        n=n,
        cycles=c,
        max_cycle_min=big_l,
        bad_pairs=bad,
        min_nice=max(big_l + 1, 2 * bad + c),
        parity="odd" if c % 2 == 0 else "even",
        bound_total=bound_total,
        bound_after_min=bound_after_min,
        max_nice=min(bound_total, bound_after_min),
    )


def is_bad_cycle(cycle, i: int) -> bool:
    """A cycle is bad w.r.t. i when i lies outside [min, max] of the cycle."""
    if not cycle:
        raise ValueError("cycle must be non-empty")
    return not min(cycle) <= i <= max(cycle)


def cycle_gap_check(word, i: int, j: int) -> bool:
    """Check the implication: j nice and j > i forces j >= i + c_i - 1,
    where c_i is the cycle count with the sentinel at i.

    Evaluated against the true nice set; returns whether it held.
    """
    from .nice import find_nice_naive

    nice_set = set(find_nice_naive(word).nice)
    if j not in nice_set or j <= i:
        return True
    c_i = perm.insertion_permutation(word, i).cycle_count()
    return j >= i + c_i - 1


def bad_cycle_exclusion_check(word, i: int) -> bool:
    """Check both one-sided exclusions of a bad cycle of the permutation with
    the sentinel at i: i below the cycle kills all j <= i, i above it kills
    all j >= i.

    Evaluated against the true nice set; returns whether both held.
    """
    from .nice import find_nice_naive

    nice_set = set(find_nice_naive(word).nice)
    for cyc in perm.insertion_permutation(word, i).cycles():
        if i > max(cyc) and any(j >= i for j in nice_set):
            return False
        if i < min(cyc) and any(j <= i for j in nice_set):
            return False
    return True
