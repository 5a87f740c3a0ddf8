"""Admissible sentinel positions of a word.

Position i of a word w is *nice* when inserting the sentinel there turns w
into the Burrows-Wheeler transform of some sentinel-terminated word, which
happens exactly when the rank permutation of the extended word is a single
cycle.  The fast scan keeps those cycles in a splay forest and updates them
with one split or merge per position; the naive scan re-sorts every
insertion; the fast-start scan skips the prefix that the lower-bound
machinery proves fruitless.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import _fast, bounds, perm, splay, words
from .errors import EmptyWordError, NotNicePositionError


@dataclass(frozen=True)
class StepRecord:
    """One split/merge step; i is the marker position the step decided."""

    i: int
    kind: str  # "merge" or "split"
    cycles: int
    nice: bool


@dataclass(frozen=True)
class NiceReport:
    word: bytes
    nice: tuple[int, ...]
    start: int = 1
    initial_cycles: int | None = None
    trace: tuple[StepRecord, ...] | None = None
    preimages: dict[int, bytes] | None = None
    lyndon_at_2: bool | None = None
    rotations: int = 0


_KIND = {1: "merge", 2: "split"}


def _steps(kinds, counts, i0):
    return tuple(
        StepRecord(i0 + j + 1, _KIND[int(kinds[j])], int(counts[j]), counts[j] == 1)
        for j in range(len(kinds))
    )


def find_nice(word, trace: bool = False, preimages: bool = False) -> NiceReport:
    """All nice positions via the splay-forest scan, O(n log n)."""
    data = words.check_word(word)
    sigma_w = _fast.standard_perm(words.symbols(data))
    sigma1 = _fast.insertion_perm(sigma_w, 1)
    positions, kinds, counts, c0, rots = _fast.drive(sigma1, 1, trace)
    report = NiceReport(
        word=data,
        nice=tuple(int(p) for p in positions),
        start=1,
        initial_cycles=int(c0),
        trace=_steps(kinds, counts, 1) if trace else None,
        rotations=int(rots),
    )
    if preimages:
        report = with_preimages(report)
    return report


def find_nice_naive(word, preimages: bool = False) -> NiceReport:
    """All nice positions by re-sorting each of the n+1 insertions, O(n^2)."""
    data = words.check_word(word)
    positions = _fast.naive_nice(words.symbols(data))
    report = NiceReport(word=data, nice=tuple(int(p) for p in positions))
    if preimages:
        report = with_preimages(report)
    return report


def find_nice_fast_start(word, trace: bool = False, preimages: bool = False) -> NiceReport:
    """Like find_nice, but the scan starts at the proved lower bound.

    Positions below max(L+1, 2b+c) cannot be nice, so the scan builds the
    rank permutation for that position directly and never touches the
    prefix.  When the bound exceeds n+1 nothing can be nice at all.
    """
    data = words.check_word(word)
    profile = bounds.bounds_profile(data)
    i0 = profile.min_nice
    n = len(data)
    if i0 > n + 1:
        report = NiceReport(word=data, nice=(), start=i0)
    else:
        sigma_w = _fast.standard_perm(words.symbols(data))
        sigma0 = _fast.insertion_perm(sigma_w, i0)
        positions, kinds, counts, c0, rots = _fast.drive(sigma0, i0, trace)
        report = NiceReport(
            word=data,
            nice=tuple(int(p) for p in positions),
            start=i0,
            initial_cycles=int(c0),
            trace=_steps(kinds, counts, i0) if trace else None,
            rotations=int(rots),
        )
    if preimages:
        report = with_preimages(report)
    return report


def reconstruct_preimages(word, positions) -> dict[int, bytes]:
    """For each nice position i, the v with bwt(v + sentinel) = insertion at i."""
    data = words.check_word(word)
    out = {}
    for i in sorted(positions):
        extended = words.insert_sentinel(data, i)
        try:
            out[i] = words.inverse_bwt_sentinel(extended)
        except words.NotABwtImageError:
            raise NotNicePositionError("position %d is not nice" % i) from None
    return out


def with_preimages(report: NiceReport) -> NiceReport:
    """Report with preimages filled in and the Lyndon annotation applied."""
    pre = reconstruct_preimages(report.word, report.nice)
    report = replace(report, preimages=pre)
    return replace(report, lyndon_at_2=lyndon_flag(report))


def lyndon_flag(report: NiceReport):
    """If position 2 is nice, its preimage must be a Lyndon word.

    Returns True/False when position 2 is nice (False would be a library
    bug, so it is also asserted), None otherwise.
    """
    if report.preimages is None or 2 not in report.nice:
        return None
    flag = words.is_lyndon(report.preimages[2])
    assert flag, "preimage at position 2 must be Lyndon"
    return flag


def stepped_states(word):
    """Forest state after every step, for the trace renderer and tests.

    Yields (i, kind, cycle_count, sequences) with kind None for the initial
    state; sequences are the forest's in-order cycle rotations.
    """
    data = words.check_word(word)
    n = len(data)
    sigma1 = perm.insertion_permutation(data, 1)
    forest = splay.SplayForest.from_cycles(sigma1.cycles(), size=n + 1)
    c = sigma1.cycle_count()
    yield 1, None, c, forest.sequences()
    for i in range(1, n + 1):
        if forest.same_cycle_as_first(i + 1):
            forest.split_after(i + 1)
            c += 1
            kind = "split"
        else:
            forest.merge_first_with(i + 1, i)
            c -= 1
            kind = "merge"
        seqs = forest.sequences()
        # driver invariant: the first cycle runs from 1 to the marker position
        assert seqs[0][0] == 1 and seqs[0][-1] == i + 1
        yield i + 1, kind, c, seqs


def report_to_dict(report: NiceReport, sentinel: str = "$") -> dict:
    """JSON-ready form of a report."""
    out = {
        "word": words.decode_word(report.word, sentinel),
        "nice": list(report.nice),
    }
    if report.preimages is not None:
        out["preimages"] = {
            str(i): words.decode_word(v, sentinel) for i, v in report.preimages.items()
        }
    if report.lyndon_at_2 is not None:
        out["lyndon_at_2"] = report.lyndon_at_2
    if report.trace is not None:
        out["trace"] = [
            {"i": s.i, "kind": s.kind, "cycles": s.cycles, "nice": s.nice}
            for s in report.trace
        ]
    return out
