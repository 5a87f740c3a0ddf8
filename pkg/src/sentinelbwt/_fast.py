"""Compiled kernels for the hot paths.

Permutations are stored 1-based in int64 arrays of length m+1 with index 0
unused, so that the code matches the 1-based conventions of the public API.
The splay forest lives in three parallel arrays (parent / left / right)
indexed by element; 0 is the null link.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def standard_perm(sym):
    """Rank permutation of a byte word via counting sort.

    sigma(i) < sigma(j) iff sym[i] < sym[j], or they are equal and i < j.
    The reverse scan over cumulative counts makes the tie-break stable by
    construction.
    """
    n = sym.shape[0]
    count = np.zeros(256, dtype=np.int64)
    for i in range(n):
        count[sym[i]] += 1
    for j in range(1, 256):
        count[j] += count[j - 1]
    sigma = np.zeros(n + 1, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        c = sym[i]
        sigma[i + 1] = count[c]
        count[c] -= 1
    return sigma


@njit(cache=True, nogil=True)
def count_cycles(sigma):
    """Number of cycles of a 1-based permutation array."""
    m = sigma.shape[0] - 1
    seen = np.zeros(m + 1, dtype=np.uint8)
    c = 0
    for s in range(1, m + 1):
        if seen[s]:
            continue
        c += 1
        j = s
        while not seen[j]:
            seen[j] = 1
            j = sigma[j]
    return c


@njit(cache=True, nogil=True)
def orbit_of_one(sigma):
    """Length of the cycle containing element 1."""
    length = 0
    j = 1
    while True:
        j = sigma[j]
        length += 1
        if j == 1:
            return length


@njit(cache=True, nogil=True)
def insertion_perm(sigma, i):
    """Rank permutation after inserting the minimal marker at position i.

    Closed form: positions left of i keep their image shifted up by one,
    i maps to 1, and positions right of i are the old position one to the
    left, image shifted up by one.
    """
    n = sigma.shape[0] - 1
    out = np.zeros(n + 2, dtype=np.int64)
    for j in range(1, i):
        out[j] = sigma[j] + 1
    out[i] = 1
    for j in range(i + 1, n + 2):
        out[j] = sigma[j - 1] + 1
    return out


@njit(cache=True, nogil=True)
def _rotate_up(par, lef, rig, x):
    """One edge rotation moving x above its parent."""
    p = par[x]
    g = par[p]
    if lef[p] == x:
        b = rig[x]
        lef[p] = b
        if b:
            par[b] = p
        rig[x] = p
    else:
        b = lef[x]
        rig[p] = b
        if b:
            par[b] = p
        lef[x] = p
    par[p] = x
    par[x] = g
    if g:
        if lef[g] == p:
            lef[g] = x
        else:
            rig[g] = x


@njit(cache=True, nogil=True)
def splay(par, lef, rig, x):
    """Move x to the root of its tree; returns the number of rotations."""
    rots = 0
    while par[x] != 0:
        p = par[x]
        g = par[p]
        if g == 0:
            _rotate_up(par, lef, rig, x)
            rots += 1
        elif (lef[g] == p) == (lef[p] == x):
            # zig-zig: rotate the parent first
            _rotate_up(par, lef, rig, p)
            _rotate_up(par, lef, rig, x)
            rots += 2
        else:
            # zig-zag
            _rotate_up(par, lef, rig, x)
            _rotate_up(par, lef, rig, x)
            rots += 2
    return rots


@njit(cache=True, nogil=True)
def build_tree(par, lef, rig, seq, lo, hi, stack):
    """Balanced BST over seq[lo:hi] whose in-order traversal is the slice.

    Iterative midpoint construction; stack holds (lo, hi, parent, side)
    quadruples and never grows beyond ~4 * tree depth.
    """
    if hi <= lo:
        return 0
    top = 0
    stack[0] = lo
    stack[1] = hi
    stack[2] = 0
    stack[3] = 0
    top = 4
    root = 0
    while top > 0:
        top -= 4
        a = stack[top]
        b = stack[top + 1]
        pr = stack[top + 2]
        side = stack[top + 3]
        mid = (a + b) // 2
        x = seq[mid]
        par[x] = pr
        lef[x] = 0
        rig[x] = 0
        if pr == 0:
            root = x
        elif side == 0:
            lef[pr] = x
        else:
            rig[pr] = x
        if mid + 1 < b:
            stack[top] = mid + 1
            stack[top + 1] = b
            stack[top + 2] = x
            stack[top + 3] = 1
            top += 4
        if a < mid:
            stack[top] = a
            stack[top + 1] = mid
            stack[top + 2] = x
            stack[top + 3] = 0
            top += 4
    return root


@njit(cache=True, nogil=True)
def build_forest(sigma, par, lef, rig):
    """One tree per cycle of sigma; returns the root of the tree holding 1.

    Scanning elements in increasing order makes every cycle start at its
    minimum, and the cycle of 1 start at 1.
    """
    m = sigma.shape[0] - 1
    seen = np.zeros(m + 1, dtype=np.uint8)
    seq = np.empty(m, dtype=np.int64)
    stack = np.empty(512, dtype=np.int64)
    first_root = 0
    for s in range(1, m + 1):
        if seen[s]:
            continue
        k = 0
        j = s
        while not seen[j]:
            seen[j] = 1
            seq[k] = j
            k += 1
            j = sigma[j]
        root = build_tree(par, lef, rig, seq, 0, k, stack)
        if s == 1:
            first_root = root
    return first_root


@njit(cache=True, nogil=True)
def in_order_fill(lef, rig, root, out, stack):
    """Iterative in-order traversal into out; returns the element count."""
    k = 0
    top = 0
    x = root
    while top > 0 or x != 0:
        while x != 0:
            stack[top] = x
            top += 1
            x = lef[x]
        top -= 1
        x = stack[top]
        out[k] = x
        k += 1
        x = rig[x]
    return k


@njit(cache=True, nogil=True)
def cut_right(par, lef, rig, x):
    """Detach and return the right subtree of a root x."""
    d = rig[x]
    rig[x] = 0
    if d:
        par[d] = 0
    return d


@njit(cache=True, nogil=True)
def merge_step(par, lef, rig, i, x):
    """Join the tree of x = i+1 into the tree of i.

    The tree of x, read in order, is some rotation (B, x, D); the first tree
    is (A, i) with i its maximum.  The result reads A, i, D, B, x, realized
    by cutting D off, splaying i and the rightmost element of D, and two
    root-level joins.  Returns the rotation count; the merged root is i.
    """
    rots = 0
    d = cut_right(par, lef, rig, x)
    rots += splay(par, lef, rig, i)
    # i is the maximum of its tree, so after splaying its right child is null
    if d != 0:
        y = d
        while rig[y] != 0:
            y = rig[y]
        rots += splay(par, lef, rig, y)
        rig[i] = y
        par[y] = i
        rig[y] = x
        par[x] = y
    else:
        rig[i] = x
        par[x] = i
    return rots


@njit(cache=True, nogil=True)
def drive(sigma_start, i0, want_steps):
    """Scan insertion positions i0..n+1 and report those with a cyclic rank
    permutation.

    sigma_start is the rank permutation of {1..n+1} for the marker at i0.
    Each iteration tests whether i+1 shares the first cycle (splay i+1 and
    look at the old first root), then splits or merges, keeping a running
    cycle count.  Returns (positions, kinds, counts, start_cycles, rotations)
    where kinds[j]/counts[j] describe the step producing the permutation for
    marker position i0+j+1 (kind 1 = merge, 2 = split).
    """
    m = sigma_start.shape[0] - 1
    n = m - 1
    par = np.zeros(m + 1, dtype=np.int64)
    lef = np.zeros(m + 1, dtype=np.int64)
    rig = np.zeros(m + 1, dtype=np.int64)
    first_root = build_forest(sigma_start, par, lef, rig)
    c = count_cycles(sigma_start)
    c0 = c
    rots = 0
    positions = np.empty(m, dtype=np.int64)
    npos = 0
    nsteps = n - i0 + 1
    if want_steps:
        kinds = np.empty(nsteps, dtype=np.uint8)
        counts = np.empty(nsteps, dtype=np.int64)
    else:
        kinds = np.empty(0, dtype=np.uint8)
        counts = np.empty(0, dtype=np.int64)
    if c == 1:
        positions[npos] = i0
        npos += 1
    for i in range(i0, n + 1):
        x = i + 1
        rots += splay(par, lef, rig, x)
        if par[first_root] != 0 or first_root == x:
            # split: x is inside the first cycle (A, x, B); keep (A, x)
            c += 1
            cut_right(par, lef, rig, x)
            first_root = x
            if want_steps:
                kinds[i - i0] = 2
        else:
            c -= 1
            rots += merge_step(par, lef, rig, i, x)
            first_root = i
            if want_steps:
                kinds[i - i0] = 1
        if want_steps:
            counts[i - i0] = c
        if c == 1:
            positions[npos] = i + 1
            npos += 1
    return positions[:npos], kinds, counts, c0, rots


@njit(cache=True, nogil=True)
def naive_nice(sym):
    """Quadratic reference scan: re-sort every marker insertion and walk the
    cycle of 1 once."""
    n = sym.shape[0]
    m = n + 1
    dol = np.empty(m, dtype=np.uint8)
    positions = np.empty(m, dtype=np.int64)
    npos = 0
    count = np.zeros(256, dtype=np.int64)
    sigma = np.zeros(m + 1, dtype=np.int64)
    for i in range(1, m + 1):
        for j in range(i - 1):
            dol[j] = sym[j]
        dol[i - 1] = 0
        for j in range(i - 1, n):
            dol[j + 1] = sym[j]
        for j in range(256):
            count[j] = 0
        for j in range(m):
            count[dol[j]] += 1
        for j in range(1, 256):
            count[j] += count[j - 1]
        for j in range(m - 1, -1, -1):
            c = dol[j]
            sigma[j + 1] = count[c]
            count[c] -= 1
        length = 0
        j = 1
        while True:
            j = sigma[j]
            length += 1
            if j == 1:
                break
        if length == m:
            positions[npos] = i
            npos += 1
    return positions[:npos]


@njit(cache=True, nogil=True)
def _check_forest_state(par, lef, rig, sigma, i, order, stack):
    """Verify the forest is exactly the cycle structure of sigma.

    Every tree's in-order sequence must be a rotation of a cycle of sigma,
    the trees must partition {1..m}, and the tree holding 1 must read
    1, ..., i.  Returns False on the first violation.
    """
    m = sigma.shape[0] - 1
    covered = 0
    for r in range(1, m + 1):
        if par[r] != 0:
            continue
        k = in_order_fill(lef, rig, r, order, stack)
        covered += k
        for j in range(k - 1):
            if sigma[order[j]] != order[j + 1]:
                return False
        if sigma[order[k - 1]] != order[0]:
            return False
        has_one = False
        for j in range(k):
            if order[j] == 1:
                has_one = True
                break
        if has_one:
            if order[0] != 1 or order[k - 1] != i:
                return False
    return covered == m


@njit(cache=True, nogil=True)
def forest_matches_direct(sym):
    """Run the insertion scan and check the forest against the directly
    computed rank permutation after every step.

    Mirrors the loop of drive(); used by the structural test sweep.
    """
    n = sym.shape[0]
    m = n + 1
    sigma_w = standard_perm(sym)
    sigma = insertion_perm(sigma_w, 1)
    par = np.zeros(m + 1, dtype=np.int64)
    lef = np.zeros(m + 1, dtype=np.int64)
    rig = np.zeros(m + 1, dtype=np.int64)
    first_root = build_forest(sigma, par, lef, rig)
    order = np.empty(m, dtype=np.int64)
    stack = np.empty(m + 2, dtype=np.int64)
    if not _check_forest_state(par, lef, rig, sigma, 1, order, stack):
        return False
    for i in range(1, n + 1):
        x = i + 1
        splay(par, lef, rig, x)
        if par[first_root] != 0 or first_root == x:
            cut_right(par, lef, rig, x)
            first_root = x
        else:
            merge_step(par, lef, rig, i, x)
            first_root = i
        sigma = insertion_perm(sigma_w, i + 1)
        if not _check_forest_state(par, lef, rig, sigma, i + 1, order, stack):
            return False
    return True


@njit(cache=True, nogil=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def runlength_gcd(sym):
    """Greatest common divisor of the maximal-block lengths."""
    n = sym.shape[0]
    g = 0
    run = 1
    for j in range(1, n):
        if sym[j] == sym[j - 1]:
            run += 1
        else:
            g = _gcd(g, run)
            run = 1
    return _gcd(g, run)


@njit(cache=True, nogil=True)
def stats_range(k, n, start, stop):
    """Tally words with index in [start, stop) of the base-k counter order.

    Returns a ((n+1)//2 + 1) x 3 matrix: rows indexed by the number of
    admissible insertion positions h, columns = (not a BWT image, BWT of a
    primitive word, BWT of a power).
    """
    hmax = (n + 1) // 2
    out = np.zeros((hmax + 1, 3), dtype=np.int64)
    sym = np.empty(n, dtype=np.uint8)
    for idx in range(start, stop):
        v = idx
        for pos in range(n - 1, -1, -1):
            sym[pos] = np.uint8(1 + v % k)
            v //= k
        sigma = standard_perm(sym)
        c = count_cycles(sigma)
        g = runlength_gcd(sym)
        sigma1 = insertion_perm(sigma, 1)
        positions, _, _, _, _ = drive(sigma1, 1, False)
        h = positions.shape[0]
        if c != g:
            out[h, 0] += 1
        elif c == 1:
            out[h, 1] += 1
        else:
            out[h, 2] += 1
    return out


def warmup():
    """Force compilation of every kernel on a tiny input."""
    sym = np.frombuffer(b"\x02\x01", dtype=np.uint8)
    sigma = standard_perm(sym)
    count_cycles(sigma)
    orbit_of_one(sigma)
    sigma1 = insertion_perm(sigma, 1)
    drive(sigma1, 1, True)
    naive_nice(sym)
    forest_matches_direct(sym)
    runlength_gcd(sym)
    stats_range(2, 2, 0, 4)
