"""Exhaustive statistics over all words of a given length and alphabet size.

For every word the scan records how many nice positions it has and whether
it is no transform image at all, the transform of a primitive word, or the
transform of a proper power.  Work is split into disjoint counter ranges;
the kernels release the GIL, so ranges can run on a thread pool and the
summed rows are identical for any worker count.
"""

from __future__ import annotations

import csv
import enum
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import _fast, words
from .errors import TooLargeError

DEFAULT_BUDGET = 10**8
# Largest sweeps with precedent; anything beyond needs force=True.
GATES = {2: 20, 3: 13}

CSV_COLUMNS = ("n", "h", "all", "noBWT", "BWT", "prim", "pow")


class BwtClass(enum.Enum):
    NOT_IMAGE = "not a BWT image"
    OF_PRIMITIVE = "BWT of a primitive word"
    OF_POWER = "BWT of a power"


def classify(word) -> BwtClass:
    """Transform-image classification from cycle count vs run-length gcd."""
    data = words.check_word(word)
    sym = words.symbols(data)
    c = _fast.count_cycles(_fast.standard_perm(sym))
    g = _fast.runlength_gcd(sym)
    if c != g:
        return BwtClass.NOT_IMAGE
    return BwtClass.OF_PRIMITIVE if c == 1 else BwtClass.OF_POWER


@dataclass(frozen=True)
class StatsRow:
    n: int
    h: int
    total: int
    no_bwt: int
    bwt: int
    prim: int
    pow: int


def enumerate_stats(
    alphabet_size: int,
    length: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
) -> list[StatsRow]:
    """One StatsRow per h in 0..(n+1)//2 over all alphabet_size**length words."""
    k, n = alphabet_size, length
    if k < 1 or n < 1:
        raise ValueError("alphabet size and length must be at least 1")
    total = k**n
    if not force:
        if total > budget:
            raise TooLargeError(
                "%d^%d = %d words exceeds the budget %d; pass force/--force"
                % (k, n, total, budget)
            )
        if n > GATES.get(k, n):
            raise TooLargeError(
                "sweeps with alphabet %d beyond length %d need force/--force"
                % (k, GATES[k])
            )
    counts = _sweep(k, n, total, max(1, workers))
    rows = []
    for h in range(counts.shape[0]):
        no_bwt, prim, power = (int(v) for v in counts[h])
        rows.append(
            StatsRow(
                n=n,
                h=h,
                total=no_bwt + prim + power,
                no_bwt=no_bwt,
                bwt=prim + power,
                prim=prim,
                pow=power,
            )
        )
    return rows


def _sweep(k: int, n: int, total: int, workers: int) -> np.ndarray:
    if workers == 1 or total < 4 * workers:
        return _fast.stats_range(k, n, 0, total)
    bounds = [total * w // workers for w in range(workers + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(
            pool.map(
                lambda se: _fast.stats_range(k, n, se[0], se[1]),
                zip(bounds, bounds[1:]),
            )
        )
    out = parts[0]
    for part in parts[1:]:
        out = out + part
    return out


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r.n, r.h, r.total, r.no_bwt, r.bwt, r.prim, r.pow])
    return buf.getvalue()


def reference_rows() -> list[StatsRow]:
    """Bundled reference tables: binary n = 3..14 and ternary n = 3..13,
    keyed by alphabet size via the CSV's sigma column."""
    out = []
    text = resources.files("sentinelbwt.data").joinpath("reference_stats.csv").read_text()
    for rec in csv.DictReader(io.StringIO(text)):
        out.append(
            (
                int(rec["sigma"]),
                StatsRow(
                    n=int(rec["n"]),
                    h=int(rec["h"]),
                    total=int(rec["all"]),
                    no_bwt=int(rec["noBWT"]),
                    bwt=int(rec["BWT"]),
                    prim=int(rec["prim"]),
                    pow=int(rec["pow"]),
                ),
            )
        )
    return out


def reference_table(alphabet_size: int, length: int) -> list[StatsRow]:
    rows = [r for k, r in reference_rows() if k == alphabet_size and r.n == length]
    return sorted(rows, key=lambda r: r.h)


def check_against_reference(alphabet_size: int, length: int, workers: int = 1):
    """Compare a computed table with the bundled reference.

    Returns (ok, computed, expected); expected is empty when the reference
    has no block for this alphabet/length.
    """
    expected = reference_table(alphabet_size, length)
    computed = enumerate_stats(alphabet_size, length, workers=workers, force=True)
    return computed == expected and bool(expected), computed, expected


def plot_rows(rows, path, alphabet_size: int) -> None:
    """Stacked bar chart of the h histogram, written to path."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    hs = [r.h for r in rows]
    no_bwt = [r.no_bwt for r in rows]
    prim = [r.prim for r in rows]
    power = [r.pow for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar(hs, no_bwt, label="not a BWT image", color="#777777")
    ax.bar(hs, prim, bottom=no_bwt, label="BWT of primitive", color="#3572b0")
    ax.bar(
        hs,
        power,
        bottom=[a + b for a, b in zip(no_bwt, prim)],
        label="BWT of power",
        color="#d9822b",
    )
    n = rows[0].n if rows else 0
    ax.set_xlabel("nice positions h(w)")
    ax.set_ylabel("words")
    ax.set_yscale("symlog")
    ax.set_title("alphabet %d, length %d" % (alphabet_size, n))
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
