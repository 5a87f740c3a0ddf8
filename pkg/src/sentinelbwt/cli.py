"""Command-line front end.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success, 1
domain error (e.g. inverting a word that is no transform image), 2 usage
error.  With --json, errors are emitted as {"error": ...} on stdout and the
exit code stays nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import nice as nice_mod
from . import pseudo as pseudo_mod
from . import stats as stats_mod
from . import words
from .errors import (
    BadSentinelCountError,
    EmptyWordError,
    NotABwtImageError,
    TooLargeError,
)

DOMAIN_ERRORS = (
    EmptyWordError,
    BadSentinelCountError,
    NotABwtImageError,
    TooLargeError,
    ValueError,
    IndexError,
)


def _add_word_source(sub):
    sub.add_argument("word", nargs="?", help="the word (omit to read --file or stdin)")
    sub.add_argument("--file", help="read the word from this file (raw bytes)")
    sub.add_argument(
        "--sentinel",
        default="$",
        help="printable character standing for the sentinel (default: $)",
    )
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _read_word(args, parser) -> bytes:
    if args.word is not None and args.file is not None:
        parser.error("give the word either as an argument or via --file, not both")
    if len(args.sentinel) != 1:
        parser.error("--sentinel must be a single character")
    if args.word is not None:
        raw = args.word.encode("latin-1", errors="strict")
    elif args.file is not None:
        with open(args.file, "rb") as fh:
            raw = fh.read().rstrip(b"\r\n")
    else:
        raw = sys.stdin.buffer.read().rstrip(b"\r\n")
    if b"\x00" in raw:
        raise BadSentinelCountError(
            "raw byte 0x00 is reserved; write the sentinel as %r" % args.sentinel
        )
    return raw.replace(args.sentinel.encode("latin-1"), b"\x00")


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def cmd_nice(args, parser) -> int:
    word = _read_word(args, parser)
    if args.naive:
        report = nice_mod.find_nice_naive(word, preimages=args.preimages)
    elif args.fast_start:
        report = nice_mod.find_nice_fast_start(
            word, trace=args.trace, preimages=args.preimages
        )
    else:
        report = nice_mod.find_nice(word, trace=args.trace, preimages=args.preimages)
    if args.json:
        _emit_json(nice_mod.report_to_dict(report, args.sentinel))
        return 0
    print(" ".join(str(i) for i in report.nice))
    if args.preimages:
        for i in report.nice:
            print("%d\t%s" % (i, words.decode_word(report.preimages[i], args.sentinel)))
    return 0


def cmd_bwt(args, parser) -> int:
    word = _read_word(args, parser)
    out = words.decode_word(words.bwt(word), args.sentinel)
    _emit_json({"bwt": out}) if args.json else print(out)
    return 0


def cmd_unbwt(args, parser) -> int:
    word = _read_word(args, parser)
    out = words.decode_word(words.inverse_bwt_sentinel(word), args.sentinel)
    _emit_json({"word": out}) if args.json else print(out)
    return 0


def cmd_check(args, parser) -> int:
    word = _read_word(args, parser)
    kind = stats_mod.classify(word)
    _emit_json({"class": kind.value}) if args.json else print(kind.value)
    return 0


def cmd_bounds(args, parser) -> int:
    word = _read_word(args, parser)
    profile = bounds_mod.bounds_profile(word)
    payload = {
        "n": profile.n,
        "cycles": profile.cycles,
        "max_cycle_min": profile.max_cycle_min,
        "bad_pairs": profile.bad_pairs,
        "min_nice": profile.min_nice,
        "parity": profile.parity,
        "bound_total": profile.bound_total,
        "bound_after_min": profile.bound_after_min,
        "max_nice": profile.max_nice,
    }
    if args.json:
        _emit_json(payload)
        return 0
    labels = {
        "n": "word length",
        "cycles": "cycles of the rank permutation",
        "max_cycle_min": "largest cycle minimum",
        "bad_pairs": "bad pairs",
        "min_nice": "smallest possible nice position",
        "parity": "parity of any nice position",
        "bound_total": "bound (n+1)/2 on the count",
        "bound_after_min": "bound past the largest minimum",
        "max_nice": "bound on the number of nice positions",
    }
    for key, value in payload.items():
        print("%-38s %s" % (labels[key], value))
    return 0


def cmd_pseudo(args, parser) -> int:
    word = _read_word(args, parser)
    from . import perm

    cap = args.cap
    pcs = pseudo_mod.enumerate_pseudo_cycles(perm.standard_permutation(word), cap=cap)
    uncovered = pseudo_mod.nice_by_characterization(word, cap=cap)
    if args.json:
        _emit_json(
            {
                "pseudo_cycles": [
                    {"left": list(pc.left), "right": list(pc.right), "interval": [pc.low, pc.high]}
                    for pc in pcs
                ],
                "nice": list(uncovered),
            }
        )
        return 0
    for pc in pcs:
        print(
            "{%s} | {%s}  R=[%d..%d]"
            % (
                ",".join(map(str, pc.left)),
                ",".join(map(str, pc.right)),
                pc.low,
                pc.high,
            )
        )
    print("uncovered (nice): %s" % (" ".join(map(str, uncovered)) or "-"))
    return 0


def cmd_trace(args, parser) -> int:
    word = _read_word(args, parser)
    from . import perm

    sigma = perm.standard_permutation(word)
    print("word   %s" % words.decode_word(word, args.sentinel))
    print("ranks  %s   cycles %d" % (sigma.cycle_string(), sigma.cycle_count()))
    rows = []
    for i, kind, count, seqs in nice_mod.stepped_states(word):
        cyc = "".join("(%s)" % ",".join(map(str, s)) for s in seqs)
        rows.append((i, cyc, kind or "-", count, "*" if count == 1 else ""))
    width = max(len(r[1]) for r in rows)
    print("%3s  %-*s  %-5s  %6s" % ("i", width, "cycles", "step", "count"))
    for i, cyc, kind, count, mark in rows:
        print("%3d  %-*s  %-5s  %6d %s" % (i, width, cyc, kind, count, mark))
    return 0


def cmd_stats(args, parser) -> int:
    if args.paper_check:
        blocks = (
            [(args.sigma, args.len)]
            if args.len is not None
            else [(2, n) for n in range(3, 15)] + [(3, n) for n in range(3, 11)]
        )
        failed = []
        for k, n in blocks:
            ok, _, expected = stats_mod.check_against_reference(k, n, workers=args.workers)
            status = "ok" if ok else ("missing" if not expected else "MISMATCH")
            print("sigma=%d n=%-2d %s" % (k, n, status))
            if not ok:
                failed.append((k, n))
        return 1 if failed else 0
    if args.len is None:
        parser.error("--len is required unless --paper-check runs the default sweep")
    rows = stats_mod.enumerate_stats(
        args.sigma, args.len, workers=args.workers, force=args.force
    )
    text = stats_mod.rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        if not args.no_plot:
            figure = args.out.rsplit(".", 1)[0] + ".png"
            stats_mod.plot_rows(rows, figure, args.sigma)
            print("wrote %s and %s" % (args.out, figure), file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentinelbwt",
        description="sentinel insertion positions that turn a word into a "
        "Burrows-Wheeler transform image",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("nice", help="list all nice positions of a word")
    _add_word_source(p)
    p.add_argument("--naive", action="store_true", help="use the quadratic rescan")
    p.add_argument(
        "--fast-start", action="store_true", help="start the scan at the lower bound"
    )
    p.add_argument("--preimages", action="store_true", help="also print each preimage")
    p.add_argument("--trace", action="store_true", help="include steps in JSON output")
    p.set_defaults(func=cmd_nice)

    p = subs.add_parser("bwt", help="Burrows-Wheeler transform of a word")
    _add_word_source(p)
    p.set_defaults(func=cmd_bwt)

    p = subs.add_parser("unbwt", help="invert a transform that contains one sentinel")
    _add_word_source(p)
    p.set_defaults(func=cmd_unbwt)

    p = subs.add_parser("check", help="classify a word as a transform image or not")
    _add_word_source(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("pseudo", help="pseudo-cycles and their critical intervals")
    _add_word_source(p)
    p.add_argument("--cap", type=int, default=pseudo_mod.DEFAULT_CAP)
    p.set_defaults(func=cmd_pseudo)

    p = subs.add_parser("bounds", help="bound profile of a word")
    _add_word_source(p)
    p.set_defaults(func=cmd_bounds)

    p = subs.add_parser("trace", help="step-by-step table of the splay-forest scan")
    _add_word_source(p)
    p.set_defaults(func=cmd_trace)

    p = subs.add_parser("stats", help="exhaustive statistics over all words")
    p.add_argument("--sigma", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--len", type=int, help="word length")
    p.add_argument("--out", help="write CSV here (a .png figure lands next to it)")
    p.add_argument("--no-plot", action="store_true", help="skip the figure")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true", help="lift the size gates")
    p.add_argument(
        "--paper-check",
        action="store_true",
        help="diff computed tables against the bundled reference rows",
    )
    p.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except DOMAIN_ERRORS as exc:
        if getattr(args, "json", False):
            _emit_json({"error": str(exc)})
        else:
            print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
