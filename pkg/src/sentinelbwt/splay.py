"""Forest of splay trees whose in-order traversals are the cycles of a
permutation.

No keys are stored: the binary-search-tree order is purely positional, so a
tree's in-order traversal spells one cycle's element sequence.  Elements live
in a preallocated arena (parent / left / right arrays indexed by element);
all walks are iterative, so deep trees cannot overflow the Python stack.

The forest is a mutable single-owner structure; it may be handed between
threads whole but must not be mutated concurrently.
"""

from __future__ import annotations

import numpy as np

from . import _fast
from .errors import InvalidStateError


class SplayForest:
    def __init__(self, size: int):
        self.size = size
        self.parent = np.zeros(size + 1, dtype=np.int64)
        self.left = np.zeros(size + 1, dtype=np.int64)
        self.right = np.zeros(size + 1, dtype=np.int64)
        self.first_root = 0
        self.rotations = 0
        self._stack = np.empty(size + 2, dtype=np.int64)

    @classmethod
    def from_cycles(cls, cycles, size: int | None = None) -> "SplayForest":
        """Build one balanced tree per cycle.

        The cycle containing 1 is rotated to start at 1; every other cycle is
        rotated to start at its minimum, which keeps builds deterministic.
        """
        elems = [e for cyc in cycles for e in cyc]
        if size is None:
            size = max(elems, default=0)
        if sorted(elems) != list(range(1, size + 1)):
            raise ValueError("cycles must partition 1..%d" % size)
        forest = cls(size)
        stack = np.empty(512, dtype=np.int64)
        for cyc in cycles:
            anchor = 1 if 1 in cyc else min(cyc)
            k = cyc.index(anchor)
            seq = np.array(cyc[k:] + tuple(cyc[:k]), dtype=np.int64)
            root = _fast.build_tree(
                forest.parent, forest.left, forest.right, seq, 0, len(seq), stack
            )
            if seq[0] == 1:
                forest.first_root = root
        return forest

    def _root_of(self, x: int) -> int:
        while self.parent[x] != 0:
            x = int(self.parent[x])
        return x

    def splay(self, x: int) -> None:
        """Rotate x to the root of its tree; in-order sequences never change."""
        self._check_element(x)
        self.rotations += int(_fast.splay(self.parent, self.left, self.right, x))

    def _check_element(self, x: int) -> None:
        if not 1 <= x <= self.size:
            raise IndexError("element %d out of range 1..%d" % (x, self.size))

    def same_cycle_as_first(self, x: int) -> bool:
        """Whether x lies in the first cycle's tree.

        Implemented by splaying x and testing whether the remembered first
        root acquired a parent (or is x itself); on a hit the first root
        becomes x.
        """
        self._check_element(x)
        old_root = self.first_root
        self.splay(x)
        if self.parent[old_root] != 0 or old_root == x:
            self.first_root = x
            return True
        return False

    def split_after(self, x: int) -> None:
        """Cut the first cycle (A, x, B) into (A, x) and a new tree (B)."""
        self._check_element(x)
        if self._root_of(x) != self.first_root:
            raise InvalidStateError("element %d is not in the first cycle" % x)
        self.splay(x)
        self.first_root = x
        if self.right[x] == 0:
            raise InvalidStateError("nothing follows %d in the first cycle" % x)
        _fast.cut_right(self.parent, self.left, self.right, x)

    def merge_first_with(self, x: int, i: int) -> None:
        """Merge the tree of x = i+1 into the first cycle (A, i).

        The other tree reads (B, x, D) in order; the merged tree reads
        A, i, D, B, x and its root becomes i.
        """
        self._check_element(x)
        self._check_element(i)
        self.splay(x)
        if self._root_of(i) == x:
            raise InvalidStateError("%d and %d are already in the same cycle" % (x, i))
        self.rotations += int(
            _fast.merge_step(self.parent, self.left, self.right, i, x)
        )
        self.first_root = i

    def tree_count(self) -> int:
        return int(np.count_nonzero(self.parent[1:] == 0))

    def in_order(self, x: int) -> list[int]:
        """Elements of x's tree in in-order sequence."""
        self._check_element(x)
        out = np.empty(self.size, dtype=np.int64)
        k = _fast.in_order_fill(self.left, self.right, self._root_of(x), out, self._stack)
        return [int(v) for v in out[:k]]

    def sequences(self) -> list[list[int]]:
        """In-order sequence of every tree: the first cycle's tree first,
        the rest ordered by minimum element."""
        first = self._root_of(self.first_root) if self.first_root else 0
        roots = [int(r) for r in np.nonzero(self.parent[1:] == 0)[0] + 1]
        rest = sorted(
            (self.in_order(r) for r in roots if r != first), key=min
        )
        return ([self.in_order(first)] if first else []) + rest
