"""Byte words: rotations, the Burrows-Wheeler transform, its sentinel-anchored
inverse, run lengths, and primitivity / Lyndon tests.

Words are plain ``bytes`` compared in numeric byte order.  Byte 0x00 is the
reserved sentinel and always sorts below every alphabet symbol; positions are
1-based in every public signature.
"""

from __future__ import annotations

import math

import numpy as np

from . import _fast
from .errors import BadSentinelCountError, EmptyWordError, NotABwtImageError

SENTINEL = 0x00


def as_bytes(word) -> bytes:
    """Coerce str input to raw bytes (one byte per character)."""
    if isinstance(word, str):
        return word.encode("latin-1")
    return bytes(word)


def check_word(word, max_sentinels: int = 0) -> bytes:
    """Validate a word: non-empty, at most max_sentinels 0x00 bytes."""
    data = as_bytes(word)
    if len(data) == 0:
        raise EmptyWordError("word must have length at least 1")
    if data.count(SENTINEL) > max_sentinels:
        raise BadSentinelCountError(
            "byte 0x00 is reserved for the sentinel (%d allowed here)" % max_sentinels
        )
    return data


def symbols(word) -> np.ndarray:
    """Word as a uint8 array (no validation)."""
    return np.frombuffer(as_bytes(word), dtype=np.uint8)


def encode_word(text: str, sentinel: str = "$") -> bytes:
    """Map display text to raw bytes, turning the sentinel character into 0x00."""
    data = text.encode("latin-1")
    if sentinel:
        data = data.replace(sentinel.encode("latin-1"), b"\x00")
    return data


def decode_word(word: bytes, sentinel: str = "$") -> str:
    """Map raw bytes back to display text, showing 0x00 as the sentinel character."""
    return word.replace(b"\x00", sentinel.encode("latin-1")).decode("latin-1")


def rotations(word) -> list[bytes]:
    """All rotations of the word, the i-th starting at position i."""
    data = check_word(word, max_sentinels=1)
    doubled = data + data
    n = len(data)
    return [doubled[i : i + n] for i in range(n)]


def bwt(word) -> bytes:
    """Last column of the lexicographically sorted rotation matrix.

    Defined for every word; equal rotations of a non-primitive word are kept
    with multiplicity.
    """
    data = check_word(word, max_sentinels=1)
    return bytes(rot[-1] for rot in sorted(rotations(data)))


def runlengths(word) -> list[int]:
    """Lengths of the maximal equal-symbol blocks, left to right."""
    data = check_word(word, max_sentinels=1)
    out = []
    run = 1
    for j in range(1, len(data)):
        if data[j] == data[j - 1]:
            run += 1
        else:
            out.append(run)
            run = 1
    out.append(run)
    return out


def runlength_gcd(word) -> int:
    """Greatest common divisor of the run lengths."""
    return math.gcd(*runlengths(word))


def is_bwt_image(word) -> bool:
    """Whether some word has this word as its transform.

    Holds exactly when the cycle count of the rank permutation equals the
    gcd of the run lengths.
    """
    data = check_word(word)
    sigma = _fast.standard_perm(symbols(data))
    return _fast.count_cycles(sigma) == _fast.runlength_gcd(symbols(data))


def insert_sentinel(word, i: int) -> bytes:
    """Word with the sentinel byte inserted at position i (1..n+1)."""
    data = check_word(word)
    if not 1 <= i <= len(data) + 1:
        raise IndexError("insertion position %d out of range 1..%d" % (i, len(data) + 1))
    return data[: i - 1] + b"\x00" + data[i - 1 :]


def inverse_bwt_sentinel(word) -> bytes:
    """The unique v with bwt(v + sentinel) equal to the given word.

    The word must contain the sentinel byte exactly once.  Walking the rank
    permutation from position 1 spells the preimage backwards; the walk
    closes early exactly when no preimage exists.
    """
    data = as_bytes(word)
    if len(data) == 0:
        raise EmptyWordError("word must have length at least 1")
    if data.count(SENTINEL) != 1:
        raise BadSentinelCountError("expected exactly one sentinel byte")
    m = len(data)
    sigma = _fast.standard_perm(symbols(data))
    if _fast.orbit_of_one(sigma) != m:
        raise NotABwtImageError("rank permutation is not cyclic")
    out = bytearray(m)
    j = 1
    for k in range(m):
        out[m - 1 - k] = data[j - 1]
        j = int(sigma[j])
    # out is a rotation of v + sentinel; rotate the sentinel to the end
    cut = out.index(SENTINEL)
    return bytes(out[cut + 1 :] + out[:cut])


def is_primitive(word) -> bool:
    """Whether the word is not a proper power u^k with k >= 2."""
    data = check_word(word)
    n = len(data)
    for p in range(1, n):
        if n % p == 0 and data == data[:p] * (n // p):
            return False
    return True


def is_lyndon(word) -> bool:
    """Whether the word is strictly smaller than all of its other rotations."""
    data = check_word(word)
    doubled = data + data
    n = len(data)
    return all(data < doubled[i : i + n] for i in range(1, n))
