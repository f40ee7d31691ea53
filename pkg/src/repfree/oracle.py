"""Brute-force reference answers, kept deliberately naive.

Nothing here shares code or ideas with the online detectors: first-repetition
search enumerates (prefix, start) pairs outright, and the unioccurrent-suffix
length uses plain substring search.  These are the ground truth the fast
paths are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Exponent, cells_of, find_witness_period


@dataclass(frozen=True)
class OracleResult:
    """First prefix of the text containing an e-repetition, with its witness."""

    first_prefix: int
    start: int
    period: int


def oracle_first_repetition(text, e: Exponent) -> Optional[OracleResult]:
    """Earliest prefix holding an e-repetition, smallest start, smallest period.

    Scans prefix lengths q = 2..n outward and starts 1..q-1 ascending; the
    first (q, start) admitting a witness period wins, and the witness is the
    smallest qualifying period at that location.
    """
    body = cells_of(text)[1:]
    n = len(body)
    for q in range(2, n + 1):
        for start in range(1, q):
            p = find_witness_period(body, start, q, e)
            if p is not None:
                return OracleResult(q, start, p)
    return None


def oracle_is_free(text, e: Exponent) -> bool:
    """True when no substring of the text is an e-repetition."""
    return oracle_first_repetition(text, e) is None


def oracle_unioccurrent(text) -> list[int]:
    """For each prefix, the length of its shortest unioccurrent suffix.

    t_i is the smallest t such that the length-t suffix of text[1..i] does
    not occur as a substring of text[1..i-1].  Found by direct substring
    search on progressively longer suffixes.
    """
    letters = list(text)
    out = []
    for i in range(1, len(letters) + 1):
        head = letters[:i - 1]
        for t in range(1, i + 1):
            if not _occurs(letters[i - t:i], head):
                out.append(t)
                break
    return out


def _occurs(needle: list, haystack: list) -> bool:
    nl = len(needle)
    for s in range(len(haystack) - nl + 1):
        if haystack[s:s + nl] == needle:
            return True
    return False
