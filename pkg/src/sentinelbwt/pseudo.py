"""Pseudo-cycles: the combinatorial characterization of nice positions.

A set S with a partition S_left < S_right (either side may be empty) is a
pseudo-cycle of a permutation pi when pi(S) = (S_left - 1) union S_right.
Its critical interval [max S_left + 1, min S_right] collects exactly the
sentinel positions that close S into one or more genuine cycles, so a
position is nice iff it avoids every critical interval.  Enumeration is
exponential by nature and guarded by a size cap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import perm, words
from .errors import TooLargeError

DEFAULT_CAP = 16


@dataclass(frozen=True)
class PseudoCycle:
    elements: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    low: int  # critical interval start: max(left) + 1
    high: int  # critical interval end: min(right), or n+1 for empty right

    def interval(self) -> range:
        return range(self.low, self.high + 1)


def shift_set(s, i: int) -> set[int]:
    """Elements below i stay, elements at or above i move up by one."""
    return {x if x < i else x + 1 for x in s}


def unshift_set(s, i: int) -> set[int]:
    """Inverse of shift_set; i itself must not be present."""
    if i in s:
        raise ValueError("%d must not be in the set" % i)
    return {x if x < i else x - 1 for x in s}


def _guard(n: int, cap: int) -> None:
    if n > cap:
        raise TooLargeError(
            "length %d exceeds the cap %d (cost grows as 2^n * n^2)" % (n, cap)
        )


def enumerate_pseudo_cycles(p: perm.Permutation, cap: int = DEFAULT_CAP) -> list[PseudoCycle]:
    """Every (S, split) pair satisfying the pseudo-cycle equation.

    A set may admit several valid splits with different critical intervals;
    all of them are emitted.
    """
    n = len(p)
    _guard(n, cap)
    image = p.image
    out = []
    for mask in range(1, 1 << n):
        elems = [j + 1 for j in range(n) if mask >> j & 1]
        pi_s = {image[e - 1] for e in elems}
        for t in range(len(elems) + 1):
            left, right = elems[:t], elems[t:]
            if {e - 1 for e in left} | set(right) == pi_s:
                a = left[-1] if left else 0
                b = right[0] if right else n + 1
                out.append(PseudoCycle(tuple(elems), tuple(left), tuple(right), a + 1, b))
    return out


def nice_by_characterization(word, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """Nice positions computed purely from the pseudo-cycle criterion.

    Position i lies in some critical interval iff the split of some S at
    threshold i satisfies the pseudo-cycle equation, so each i is tested
    against all 2^n - 1 sets with one vectorized pass.
    """
    data = words.check_word(word)
    n = len(data)
    _guard(n, cap)
    image = perm.standard_permutation(data).image
    masks = np.arange(1, 1 << n, dtype=np.int64)
    pib = np.array([1 << (image[j] - 1) for j in range(n)], dtype=np.int64)
    pi_of = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        bit = 1 << j
        has = (np.arange(1 << n) & bit) != 0
        pi_of[has] = pi_of[np.nonzero(has)[0] ^ bit] | pib[j]
    nice = []
    for i in range(1, n + 2):
        low = (1 << (i - 1)) - 1
        target = ((masks & low) >> 1) | (masks & ~low)
        if not np.any(pi_of[masks] == target):
            nice.append(i)
    return tuple(nice)


def verify_cycle_correspondence(word, i: int, cap: int = DEFAULT_CAP) -> bool:
    """Check both directions of the cycle / pseudo-cycle correspondence at i.

    Forward: every cycle of the sentinel-at-i permutation that avoids i must
    unshift to a pseudo-cycle whose interval contains i.  Backward: every
    pseudo-cycle whose interval contains i must shift to a union of cycles
    avoiding i.
    """
    data = words.check_word(word)
    n = len(data)
    _guard(n, cap)
    sigma_i = perm.insertion_permutation(data, i)
    cycles_avoiding = [set(c) for c in sigma_i.cycles() if i not in c]
    pcs = enumerate_pseudo_cycles(perm.standard_permutation(data), cap=cap)
    covering = [pc for pc in pcs if pc.low <= i <= pc.high]
    covering_sets = {frozenset(pc.elements) for pc in covering}
    for cyc in cycles_avoiding:
        if frozenset(unshift_set(cyc, i)) not in covering_sets:
            return False
    for pc in covering:
        shifted = shift_set(pc.elements, i)
        if i in shifted:
            return False
        if {sigma_i(x) for x in shifted} != shifted:
            return False
    return True
