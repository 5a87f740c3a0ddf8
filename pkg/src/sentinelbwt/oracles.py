"""Independent brute-force oracles and the bundled golden corpus.

The oracle here shares no code with the production scan: ranks come from a
full comparison re-sort (not counting sort, not the closed-form update) and
cyclicity from a plain orbit walk, so a bug in the fast path cannot confirm
itself.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources

from . import words
from .errors import TooLargeError

ORACLE_CAP = 2000


def oracle_nice(word) -> set[int]:
    """Nice positions straight from the definition.

    For every insertion position, rank the extended word's (symbol, index)
    pairs with a comparison sort and walk the orbit of the first position;
    the position is nice exactly when the orbit covers everything.
    """
    data = words.check_word(word)
    n = len(data)
    if n > ORACLE_CAP:
        raise TooLargeError("oracle capped at length %d" % ORACLE_CAP)
    sym = list(data)
    out = set()
    for i in range(1, n + 2):
        extended = sym[: i - 1] + [-1] + sym[i - 1 :]
        order = sorted(range(n + 1), key=lambda j: (extended[j], j))
        rank = [0] * (n + 1)
        for r, pos in enumerate(order):
            rank[pos] = r
        steps = 1
        j = rank[0]
        while j != 0:
            j = rank[j]
            steps += 1
        if steps == n + 1:
            out.add(i)
    return out


@dataclass(frozen=True)
class GoldenCase:
    group: str
    word: str
    nice: tuple[int, ...]
    sigma: str  # canonical cycle string of the word's rank permutation
    preimages: dict[int, str]  # nice position -> preimage word
    base_preimage: str | None  # lexicographically smallest v with bwt(v) = word
    note: str


def _parse_nice(field: str) -> tuple[int, ...]:
    if field in ("", "-"):
        return ()
    return tuple(int(tok) for tok in field.split())


def _parse_preimages(field: str) -> dict[int, str]:
    out = {}
    if field in ("", "-"):
        return out
    for pair in field.split():
        pos, _, value = pair.partition("=")
        out[int(pos)] = value
    return out


def golden_corpus() -> list[GoldenCase]:
    """All bundled golden rows: every binary word of length 2..5 and the 25
    longer showcase words."""
    text = resources.files("sentinelbwt.data").joinpath("golden_words.csv").read_text()
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        base = rec["base"] or None
        if base == "-":
            base = None
        out.append(
            GoldenCase(
                group=rec["group"],
                word=rec["word"],
                nice=_parse_nice(rec["nice"]),
                sigma=rec["sigma"],
                preimages=_parse_preimages(rec["preimages"]),
                base_preimage=base,
                note=rec["note"],
            )
        )
    return out
