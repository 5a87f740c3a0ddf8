"""Regenerate src/sentinelbwt/data/golden_words.csv.

Each transcribed row is verified against the library and the independent
oracle before being written; a transcription error or an upstream typo makes
this script fail loudly.  Cells marked with a note were recomputed by two
independent routes because the source prints an impossible value.
"""

import csv
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import sentinelbwt as sb
from sentinelbwt import oracles

# group, word, base preimage (or None), sigma cycle string, {pos: preimage}, note
ROWS = [
    ("len2", "aa", "aa", "(1)(2)", {3: "aa"}, ""),
    ("len2", "ab", None, "(1)(2)", {3: "ba"}, ""),
    ("len2", "ba", "ab", "(1,2)", {2: "ab"}, ""),
    ("len2", "bb", "bb", "(1)(2)", {3: "bb"}, ""),
    ("len3", "aaa", "aaa", "(1)(2)(3)", {4: "aaa"}, ""),
    ("len3", "aab", None, "(1)(2)(3)", {4: "baa"}, ""),
    ("len3", "aba", None, "(1)(2,3)", {3: "aba"}, ""),
    ("len3", "abb", None, "(1)(2)(3)", {4: "bba"}, ""),
    ("len3", "baa", "aab", "(1,3,2)", {2: "aab"}, ""),
    ("len3", "bab", None, "(1,2)(3)", {}, ""),
    ("len3", "bba", "abb", "(1,2,3)", {2: "abb", 4: "bab"}, ""),
    ("len3", "bbb", "bbb", "(1)(2)(3)", {4: "bbb"}, ""),
    ("len4", "aaaa", "aaaa", "(1)(2)(3)(4)", {5: "aaaa"}, ""),
    ("len4", "aaab", None, "(1)(2)(3)(4)", {5: "baaa"}, ""),
    ("len4", "aaba", None, "(1)(2)(3,4)", {4: "abaa"}, ""),
    ("len4", "aabb", None, "(1)(2)(3)(4)", {5: "bbaa"}, ""),
    ("len4", "abaa", None, "(1)(2,4,3)", {3: "aaba"}, ""),
    ("len4", "abab", None, "(1)(2,3)(4)", {}, ""),
    ("len4", "abba", None, "(1)(2,3,4)", {3: "abba", 5: "baba"}, ""),
    ("len4", "abbb", None, "(1)(2)(3)(4)", {5: "bbba"}, ""),
    ("len4", "baaa", "aaab", "(1,4,3,2)", {2: "aaab"}, ""),
    ("len4", "baab", None, "(1,3,2)(4)", {}, ""),
    ("len4", "baba", "aabb", "(1,3,4,2)", {2: "aabb"}, ""),
    ("len4", "babb", None, "(1,2)(3)(4)", {}, ""),
    ("len4", "bbaa", "abab", "(1,3)(2,4)", {3: "abab", 5: "baab"}, ""),
    ("len4", "bbab", None, "(1,2,3)(4)", {5: "bbab"}, ""),
    ("len4", "bbba", "abbb", "(1,2,3,4)", {2: "abbb", 4: "babb"}, ""),
    ("len4", "bbbb", "bbbb", "(1)(2)(3)(4)", {5: "bbbb"}, ""),
    ("len5", "aaaaa", "aaaaa", "(1)(2)(3)(4)(5)", {6: "aaaaa"}, ""),
    ("len5", "aaaab", None, "(1)(2)(3)(4)(5)", {6: "baaaa"}, ""),
    ("len5", "aaaba", None, "(1)(2)(3)(4,5)", {5: "abaaa"}, ""),
    ("len5", "aaabb", None, "(1)(2)(3)(4)(5)", {6: "bbaaa"}, ""),
    ("len5", "aabaa", None, "(1)(2)(3,5,4)", {4: "aabaa"}, ""),
    ("len5", "aabab", None, "(1)(2)(3,4)(5)", {}, ""),
    ("len5", "aabba", None, "(1)(2)(3,4,5)", {4: "abbaa", 6: "babaa"}, ""),
    ("len5", "aabbb", None, "(1)(2)(3)(4)(5)", {6: "bbbaa"}, ""),
    ("len5", "abaaa", None, "(1)(2,5,4,3)", {3: "aaaba"}, ""),
    ("len5", "abaab", None, "(1)(2,4,3)(5)", {}, ""),
    ("len5", "ababa", None, "(1)(2,4,5,3)", {3: "aabba"}, ""),
    ("len5", "ababb", None, "(1)(2,3)(4)(5)", {}, ""),
    ("len5", "abbaa", None, "(1)(2,4)(3,5)", {4: "ababa", 6: "baaba"}, ""),
    ("len5", "abbab", None, "(1)(2,3,4)(5)", {6: "bbaba"}, ""),
    ("len5", "abbba", None, "(1)(2,3,4,5)", {3: "abbba", 5: "babba"}, ""),
    ("len5", "abbbb", None, "(1)(2)(3)(4)(5)", {6: "bbbba"}, ""),
    ("len5", "baaaa", "aaaab", "(1,5,4,3,2)", {2: "aaaab"}, ""),
    ("len5", "baaab", None, "(1,4,3,2)(5)", {}, ""),
    ("len5", "baaba", "aaabb", "(1,4,5,3,2)", {2: "aaabb"}, ""),
    ("len5", "baabb", None, "(1,3,2)(4)(5)", {}, ""),
    ("len5", "babaa", None, "(1,4,2)(3,5)", {}, ""),
    ("len5", "babab", None, "(1,3,4,2)(5)", {}, ""),
    # source prints the impossible cycle (1,3,4,5,3); dual recomputation below
    ("len5", "babba", "aabbb", "(1,3,4,5,2)", {2: "aabbb"}, "sigma recomputed"),
    ("len5", "babbb", None, "(1,2)(3)(4)(5)", {}, ""),
    ("len5", "bbaaa", "aabab", "(1,4,2,5,3)", {2: "aabab", 4: "abaab", 6: "baaab"}, ""),
    ("len5", "bbaab", None, "(1,3)(2,4)(5)", {6: "bbaab"}, ""),
    # source prints a length-7 preimage for position 5; dual recomputation below
    ("len5", "bbaba", None, "(1,3)(2,4,5)", {3: "abbab", 5: "baabb"}, "preimage recomputed"),
    ("len5", "bbabb", None, "(1,2,3)(4)(5)", {6: "bbbab"}, ""),
    ("len5", "bbbaa", "ababb", "(1,3,5,2,4)", {2: "ababb", 6: "babab"}, ""),
    ("len5", "bbbab", None, "(1,2,3,4)(5)", {}, ""),
    ("len5", "bbbba", "abbbb", "(1,2,3,4,5)", {2: "abbbb", 4: "babbb", 6: "bbabb"}, ""),
    ("len5", "bbbbb", "bbbbb", "(1)(2)(3)(4)(5)", {6: "bbbbb"}, ""),
]

LONG = [
    ("long01", "bcacbaaacb", "aabccacabb", "(1,5,6,2,8,4,9,10,7,3)", "2 4 8 10"),
    ("long02", "ccaaaaaabb", "aaabcaaabc", "(1,9,7,5,3)(2,10,8,6,4)", "3 5 7 9 11"),
    ("long03", "cbcaaacaba", None, "(1,8,4)(2,6,3,9,7,10,5)", "3 7 11"),
    ("long04", "accbcbaaaa", None, "(1)(2,8,3,9,4,6,7)(5,10)", "6 8 10"),
    ("long05", "ccaaabcaac", None, "(1,7,9,5,3)(2,8,4)(6)(10)", "11"),
    ("long06", "bacbacacab", None, "(1,5,2)(3,8,10,7)(4,6,9)", ""),
    ("long07", "bbaabbbbbbbba", "aabbbbbbbbbab", "(1,4,2,5,6,7,8,9,10,11,12,13,3)", "2 4 6 8 10 12 14"),
    ("long08", "babbbbabbbbba", "aabbabbbbbbbb", "(1,4,6,8,9,10,11,12,13,3,5,7,2)", "2"),
    ("long09", "abbabbbbbabba", None, "(1)(2,5,7,9,11,12,13,4)(3,6,8,10)", "4 8 10"),
    ("long10", "abbaaaaaaaaaa", None, "(1)(2,12,10,8,6,4)(3,13,11,9,7,5)", "4 6 8 10 12 14"),
    ("long11", "babbaaabaaaba", None, "(1,9,5,2)(3,10,6)(4,11,7)(8,12,13)", ""),
    ("long12", "bbaaaabbbbbbbba", "aaabbbbbbbbbaab", "(1,6,4,2,7,8,9,10,11,12,13,14,15,5,3)", "2 4 6 8 10 12 14 16"),
    ("long13", "babababababbbba", "aaabaabbbbbbabb", "(1,7,10,5,9,11,12,13,14,15,6,3,8,4,2)", "2"),
    ("long14", "bbbaaaaaaaaaaaa", "aaaabaaaabaaaab", "(1,13,10,7,4)(2,14,11,8,5)(3,15,12,9,6)", "4 6 10 12 16"),
    ("long15", "bbbbbaaaaaaaaaa", "aabaabaabaabaab", "(1,11,6)(2,12,7)(3,13,8)(4,14,9)(5,15,10)", "6 8 10 14 16"),
    ("long16", "bbaababaaabbbab", None, "(1,8,4,2,9,5,10,6,3)(7,11,12,13,14)(15)", "16"),
    ("long17", "bbaababaaabbbaa", None, "(1,9,5,11,13,15,8,4,2,10,6,3)(7,12,14)", "9 11 15"),
    ("long18", "bbabaabaaabbaaa", None, "(1,10,6,3)(2,11,14,8,4,12,15,9,5)(7,13)", "10 12 14 16"),
    ("long19", "babbabbababaaab", None, "(1,8,3,9,13,6,11,14,7,12,5,2)(4,10)(15)", ""),
    ("long20", "bbaababbbabbabaaaa", "aaababbabbababbaab", "(1,10,4,2,11,16,7,13,5,12,17,8,14,18,9,15,6,3)", "2 4 6 8 10 12 14 16 18"),
    ("long21", "bbaaaaaaabbabbbbba", "aaaaabbbbbbbaaaabb", "(1,10,12,8,6,4,2,11,13,14,15,16,17,18,9,7,5,3)", "2 4 6 8 10 12"),
    ("long22", "bbbaaabaaabaaababa", "aaabaaabaaababbbab", "(1,12,7,15,17,18,11,16,10,6,3,14,9,5,2,13,8,4)", "2 6 18"),
    ("long23", "bbaaaabbbbaabbbbaa", "aaababbbbaaababbbb", "(1,9,13,15,17,7,11,5,3)(2,10,14,16,18,8,12,6,4)", "3 5 7 9 11"),
    ("long24", "bbbaaabbbbbbaaaaaa", "aababbaababbaababb", "(1,10,16,7,13,4)(2,11,17,8,14,5)(3,12,18,9,15,6)", "4 6 10 12"),
    ("long25", "bbbbbbbbbbbbaaaaaa", "abbabbabbabbabbabb", "(1,7,13)(2,8,14)(3,9,15)(4,10,16)(5,11,17)(6,12,18)", "7 9 11 13 17 19"),
]


def verify_and_collect():
    records = []
    problems = []
    for group, word, base, sigma, preimages, note in ROWS:
        wb = word.encode()
        nice = tuple(sorted(preimages)) if preimages else ()
        got_sigma = sb.standard_permutation(wb).cycle_string()
        got_fast = sb.find_nice(wb).nice
        got_oracle = tuple(sorted(oracles.oracle_nice(wb)))
        if got_sigma != sigma:
            problems.append((word, "sigma", sigma, got_sigma))
        if got_fast != nice or got_oracle != nice:
            problems.append((word, "nice", nice, (got_fast, got_oracle)))
        got_pre = sb.reconstruct_preimages(wb, nice)
        if {i: v.decode() for i, v in got_pre.items()} != preimages:
            problems.append((word, "preimages", preimages, got_pre))
        if base is not None and sb.bwt(base.encode()) != wb:
            problems.append((word, "base", base, sb.bwt(base.encode())))
        records.append((group, word, nice, sigma, preimages, base, note))
    for group, word, base, sigma, nice_field in LONG:
        wb = word.encode()
        nice = tuple(int(t) for t in nice_field.split())
        got_sigma = sb.standard_permutation(wb).cycle_string()
        got_fast = sb.find_nice(wb).nice
        got_oracle = tuple(sorted(oracles.oracle_nice(wb)))
        if got_sigma != sigma:
            problems.append((word, "sigma", sigma, got_sigma))
        if got_fast != nice or got_oracle != nice:
            problems.append((word, "nice", nice, (got_fast, got_oracle)))
        if base is not None and sb.bwt(base.encode()) != wb:
            problems.append((word, "base", base, sb.bwt(base.encode())))
        records.append((group, word, nice, sigma, {}, base, ""))
    return records, problems


def main():
    records, problems = verify_and_collect()
    for p in problems:
        print("PROBLEM:", p)
    if problems:
        raise SystemExit(1)
    out = Path(__file__).resolve().parent.parent / "src/sentinelbwt/data/golden_words.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["group", "word", "nice", "sigma", "preimages", "base", "note"])
        for group, word, nice, sigma, preimages, base, note in records:
            w.writerow(
                [
                    group,
                    word,
                    " ".join(map(str, nice)) or "-",
                    sigma,
                    " ".join("%d=%s" % (i, preimages[i]) for i in sorted(preimages)) or "-",
                    base or "-",
                    note,
                ]
            )
    print("wrote", out, "rows:", len(records))


if __name__ == "__main__":
    main()
