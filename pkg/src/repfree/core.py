"""Exact-rational exponents, 1-indexed text buffers, and repetition predicates.

A string w has period p when w[x] = w[x + p] for every x with both sides in
range.  For a fixed rational e > 1, w is an e-repetition when |w| >= e * p for
some period p of w.  Everything here compares lengths against e * p with
integer cross-multiplication only; no floats are involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Optional, Sequence

Letter = Hashable


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for positive b."""
    return -(-a // b)


@dataclass(frozen=True)
class Exponent:
    """Rational repetition threshold e = num/den, normalized, strictly > 1."""

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if not (isinstance(num, int) and isinstance(den, int)):
            raise ValueError("exponent parts must be integers")
        if num <= 0 or den <= 0:
            raise ValueError("exponent parts must be positive")
        g = math.gcd(num, den)
        num //= g
        den //= g
        if num <= den:
            raise ValueError(f"exponent must be greater than 1, got {num}/{den}")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def parse(cls, s: str) -> "Exponent":
        """Parse "N" or "N/D" into a normalized exponent."""
        body = s.strip()
        try:
            if "/" in body:
                a, b = body.split("/", 1)
                return cls(int(a.strip()), int(b.strip()))
            return cls(int(body))
        except ValueError as exc:
            raise ValueError(f"bad exponent {s!r}: {exc}") from None

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


def exponent_parse(s: str) -> Exponent:
    return Exponent.parse(s)


class TextBuffer:
    """Growable letter sequence addressed with 1-based positions.

    Position 0 holds a sentinel so text[1] is the first letter; push/pop work
    at the right end only, which is all the online algorithms ever need.
    """

    __slots__ = ("_cells",)

    def __init__(self, letters: Iterable[Letter] = ()) -> None:
        self._cells: list = [None]
        self._cells.extend(letters)

    def push(self, letter: Letter) -> None:
        self._cells.append(letter)

    def pop(self) -> Letter:
        if len(self._cells) == 1:
            raise IndexError("pop from empty text")
        return self._cells.pop()

    def __len__(self) -> int:
        return len(self._cells) - 1

    def __getitem__(self, pos: int) -> Letter:
        if not 1 <= pos <= len(self._cells) - 1:
            raise IndexError(f"position {pos} out of range 1..{len(self._cells) - 1}")
        return self._cells[pos]

    def __iter__(self) -> Iterator[Letter]:
        return iter(self._cells[1:])

    def letters(self) -> list:
        return self._cells[1:]

    def __repr__(self) -> str:
        return f"TextBuffer({self.letters()!r})"


@dataclass(frozen=True)
class RepetitionReport:
    """An e-repetition occupying text[start..end] with the given period."""

    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def cells_of(text) -> list:
    """1-based cell list (sentinel at index 0) for a TextBuffer or any sequence."""
    if isinstance(text, TextBuffer):
        return text._cells
    cells = [None]
    cells.extend(text)
    return cells


def reaches_exponent(length: int, period: int, e: Exponent) -> bool:
    """Does a string of this length and period qualify as an e-repetition?"""
    if length < 1 or period < 1:
        raise ValueError("length and period must be positive")
    return length * e.den >= e.num * period


def is_period(text, start: int, end: int, period: int) -> bool:
    """Check text[start..end] has the given period (1-based, inclusive)."""
    cells = cells_of(text)
    for x in range(start, end - period + 1):
        if cells[x] != cells[x + period]:
            return False
    return True


def find_witness_period(text, start: int, end: int, e: Exponent) -> Optional[int]:
    """Smallest period p of text[start..end] with end-start+1 >= e*p, if any.

    A larger period can never qualify once p fails the length test, so the
    scan stops at the first p with length*den < num*p.
    """
    cells = cells_of(text)
    if not 1 <= start <= end <= len(cells) - 1:
        raise ValueError(f"bad range {start}..{end} for text of length {len(cells) - 1}")
    length = end - start + 1
    num, den = e.num, e.den
    for p in range(1, length + 1):
        if length * den < num * p:
            break
        for x in range(start, end - p + 1):
            if cells[x] != cells[x + p]:
                break
        else:
            return p
    return None


def probe_short_periods(cells: list, n: int, pmax: int, num: int, den: int,
                        out: list) -> int:
    """Probe periods 1..pmax for an e-repetition suffix ending at position n.

    For each period p whose last comparison text[n] = text[n-p] holds, walk
    left just far enough to certify length >= e*p, appending (start, period)
    to `out` on success.  Probing is capped, so the work per call is bounded
    by a function of pmax alone.  Returns the number of comparisons made.
    """
    ops = 0
    last = cells[n]
    if pmax >= n:
        pmax = n - 1
    for p in range(1, pmax + 1):
        ops += 1
        if cells[n - p] != last:
            continue
        # one periodicity comparison is in hand; `more` still missing
        more = ceil_div((num - den) * p, den) - 1
        m = n - 1
        while more > 0 and m > p and cells[m] == cells[m - p]:
            more -= 1
            m -= 1
            ops += 1
        if more <= 0:
            out.append((m + 1 - p, p))
    return ops


def leftmost_report(text, end: int, candidates: Iterable[tuple[int, int]]) -> RepetitionReport:
    """Pin the leftmost repetition ending at `end` among fired candidates.

    Each candidate (start, period) is extended left as far as its period
    holds; the least (start, period) wins.  With a repetition-free proper
    prefix this is exactly the oracle's minimal start and witness period.
    """
    cells = cells_of(text)
    best: Optional[tuple[int, int]] = None
    for start, period in set(candidates):
        left = start - 1
        while left >= 1 and cells[left] == cells[left + period]:
            left -= 1
        key = (left + 1, period)
        if best is None or key < best:
            best = key
    if best is None:
        raise ValueError("no candidates to finalize")
    return RepetitionReport(best[0], end, best[1])
