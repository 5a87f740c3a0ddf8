"""Permutations of {1..n} in one-line form, canonical cycle decomposition,
and the update calculus for moving a sentinel through a word one position at
a time.
"""

from __future__ import annotations

import re

import numpy as np

from . import _fast, words
from .errors import InvalidStateError


class Permutation:
    """Immutable bijection on {1..n}, stored as a 1-based image tuple."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(int(v) for v in image)
        n = len(image)
        seen = [False] * (n + 1)
        for v in image:
            if not 1 <= v <= n or seen[v]:
                raise ValueError("not a bijection on 1..%d: %r" % (n, image))
            seen[v] = True
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __len__(self):
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.image),)

    def as_array(self) -> np.ndarray:
        """1-based int64 array with index 0 unused."""
        arr = np.zeros(len(self.image) + 1, dtype=np.int64)
        arr[1:] = self.image
        return arr

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical cycle decomposition: each cycle starts at its minimum,
        cycles ordered by increasing minimum."""
        n = len(self.image)
        seen = [False] * (n + 1)
        out = []
        for s in range(1, n + 1):
            if seen[s]:
                continue
            cyc = []
            j = s
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.image[j - 1]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_count(self) -> int:
        return len(self.cycles())

    def sign(self) -> int:
        """(-1) ** (n - number of cycles)."""
        return -1 if (len(self.image) - self.cycle_count()) % 2 else 1

    def cycle_string(self) -> str:
        return format_cycles(self.cycles())


def format_cycles(cycles) -> str:
    """Render cycles as "(a,b,c)(d)"."""
    return "".join("(%s)" % ",".join(str(e) for e in cyc) for cyc in cycles)


def parse_cycle_string(text: str, n: int | None = None) -> Permutation:
    """Parse "(1,4,6)(2)(3,5)" (whitespace tolerated) into a Permutation."""
    groups = re.findall(r"\(([^()]*)\)", text)
    cycles = [
        tuple(int(tok) for tok in re.split(r"[,\s]+", grp.strip()) if tok)
        for grp in groups
    ]
    elems = [e for cyc in cycles for e in cyc]
    if n is None:
        n = max(elems, default=0)
    image = [0] * n
    for cyc in cycles:
        for k, e in enumerate(cyc):
            image[e - 1] = cyc[(k + 1) % len(cyc)]
    return Permutation(image)


def from_array(arr) -> Permutation:
    """Permutation from a 1-based kernel array (index 0 ignored)."""
    return Permutation(int(v) for v in arr[1:])


def standard_permutation(word) -> Permutation:
    """Rank permutation of a word: position i maps to the rank of (w_i, i)
    among all (symbol, index) pairs, so equal symbols keep index order."""
    data = words.check_word(word, max_sentinels=1)
    return from_array(_fast.standard_perm(words.symbols(data)))


def insertion_permutation(word, i: int) -> Permutation:
    """Rank permutation of the word with the sentinel inserted at position i,
    computed by the closed form rather than by re-sorting."""
    data = words.check_word(word)
    if not 1 <= i <= len(data) + 1:
        raise IndexError("insertion position %d out of range 1..%d" % (i, len(data) + 1))
    sigma = _fast.standard_perm(words.symbols(data))
    return from_array(_fast.insertion_perm(sigma, i))


def advance_insertion(perm: Permutation, i: int) -> Permutation:
    """Move the sentinel from position i to i+1 in O(1) image updates.

    Requires perm(i) == 1 (the sentinel sits at i) and i <= n-1 on a
    permutation of {1..n}; equals composing with the transposition
    (1, perm(i+1)).
    """
    n = len(perm)
    if i >= n:
        raise InvalidStateError("cannot advance past the last position")
    if perm(i) != 1:
        raise InvalidStateError("position %d does not map to 1" % i)
    image = list(perm.image)
    image[i - 1] = image[i]
    image[i] = 1
    return Permutation(image)


def transpose_cycles(perm: Permutation, x: int, y: int):
    """Compose (perm(x), perm(y)) with perm; classify the effect.

    Returns (result, "split") when x and y shared a cycle, otherwise
    (result, "merge"): a transposition always changes the cycle count by
    exactly one.
    """
    if x == y:
        raise ValueError("x and y must differ")
    image = list(perm.image)
    image[x - 1], image[y - 1] = image[y - 1], image[x - 1]
    # same cycle iff the walk from x reaches y before closing
    same = False
    j = perm(x)
    while j != x:
        if j == y:
            same = True
            break
        j = perm(j)
    return Permutation(image), ("split" if same else "merge")
