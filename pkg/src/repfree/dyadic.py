"""Backtrackable online repetition detector (alphabet needs equality only).

The detector watches for the first prefix of the text containing an
e-repetition while letters are pushed and popped freely.  Work is split by
suffix length: a constant-width scan checks the shortest lengths directly,
and a grid of catchers handles everything longer.  The grid is dyadic: at
every length divisible by 2^k a level-k catcher is refreshed, and each one
guards a segment of 2^k start positions, so a length-n text needs O(log n)
live catchers.

Backtracking undoes a read exactly: catchers pop one snapshot, and grid
slots that a read superseded are unmarked or rebuilt.  Superseded slots are
never dropped eagerly; they stay "marked" and keep working for a bounded
number of operations, which makes the oscillating push/pop worst case cheap
(a slot of width 2^k can only be rebuilt once per ~2^k operations).

Once a repetition is found the detector freezes: further reads are counted
but not applied, and backtracks unwind the counter before letters come off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .catcher import Catcher
from .core import (Exponent, Letter, RepetitionReport, TextBuffer, ceil_div,
                   leftmost_report, probe_short_periods)


@dataclass(frozen=True)
class Found:
    """Detection outcome, frozen at the step that produced it."""

    report: RepetitionReport
    found_at_length: int


def level_constant(e: Exponent) -> int:
    """Smallest integer s with s > e/(e-1); sizes the dyadic grid."""
    return e.num // (e.num - e.den) + 1


def min_level(s: int, e: Exponent) -> int:
    """Smallest level whose catcher window spans at least two positions.

    Below this level the window (see level_params) degenerates to a single
    position, which a catcher cannot use; those lengths are handled by the
    direct scan instead.
    """
    k = 0
    while (s - 1) * (1 << k) - ceil_div(s * (1 << k) * e.den, e.num) + 1 < 2:
        k += 1
    return k


def level_params(n: int, k: int, s: int, e: Exponent) -> tuple[int, int]:
    """Catcher window (i, j) for the level-k slot refreshed at length n."""
    size = 1 << k
    if n % size or s * size > n:
        raise ValueError(f"level {k} does not tick at length {n}")
    i = n - (s - 1) * size
    j = max(i, n - ceil_div(s * size * e.den, e.num))
    if j - i + 1 < 2:
        raise ValueError(f"level {k} window holds fewer than two positions")
    return i, j


def level_boundary(n: int, r: int, s: int) -> int:
    """Rightmost start position the level-r slots account for at length n."""
    size = 1 << r
    return max(0, n - ((s - 1) * size + n % size))


class _Slot:
    __slots__ = ("catcher", "marked", "ttl", "level", "seg_start", "seg_end",
                 "pat_end")

    def __init__(self, catcher: Catcher, level: int, seg_start: int,
                 seg_end: int) -> None:
        self.catcher = catcher
        self.marked = False
        self.ttl = 0
        self.level = level
        self.seg_start = seg_start
        self.seg_end = seg_end
        self.pat_end = catcher.i + catcher.h_ceil - 1


class DyadicDetector:
    """Online first-repetition detector with exact read/backtrack symmetry."""

    __slots__ = ("e", "s", "k_min", "naive_len_max", "text",
                 "_num", "_den", "_cells", "_naive_pmax", "_slots", "_found",
                 "_skipped", "_ops", "_retired_ops", "_step_fns", "_fns_stale",
                 "_cover_stale", "_covered_upto", "_marked_count")

    def __init__(self, e: Exponent) -> None:
        self.e = e
        self.s = level_constant(e)
        self.k_min = min_level(self.s, e)
        # suffixes no longer than this stay below the lowest grid level and
        # are probed directly every step
        self.naive_len_max = self.s << self.k_min
        self.text = TextBuffer()
        self._num = e.num
        self._den = e.den
        self._cells = self.text._cells
        self._naive_pmax = self.naive_len_max * e.den // e.num
        self._slots: dict[tuple[int, int, int], _Slot] = {}
        self._found: Optional[Found] = None
        self._skipped = 0
        self._ops = 0
        self._retired_ops = 0
        self._step_fns: list = []
        self._fns_stale = False
        self._cover_stale = False
        self._covered_upto = 0
        self._marked_count = 0

    def __len__(self) -> int:
        return len(self.text)

    @property
    def status(self) -> Optional[Found]:
        return self._found

    @property
    def skipped_reads(self) -> int:
        return self._skipped

    def read(self, letter: Letter) -> Optional[Found]:
        """Consume one letter and report the current detection status.

        While a repetition is current the letter is not applied; a skip
        counter records it so backtracks unwind in the right order.
        """
        if self._found is not None:
            self._skipped += 1
            self._ops += 1
            return self._found
        self.text.push(letter)
        cells = self._cells
        n = len(cells) - 1
        num = self._num
        den = self._den
        cands: list[tuple[int, int]] = []

        # short suffixes: probe each candidate period right at the end
        ops = 1 + probe_short_periods(cells, n, self._naive_pmax, num, den,
                                      cands)

        # every live catcher sees the letter, marked ones included (their
        # reports are still true repetitions)
        if self._fns_stale:
            self._rebuild_step_fns()
        for fn in self._step_fns:
            rep = fn()
            if rep is not None:
                cands.append((rep.start, rep.period))

        # refresh the grid at every level that ticks at n; a level-(k+1)
        # refresh supersedes two level-k slots, which start their countdown
        s = self.s
        k = self.k_min
        size = 1 << k
        while n % size == 0 and s * size <= n:
            ops += 1
            rep = self._ensure_unmarked(k, n)
            if rep is not None and rep.end == n:
                cands.append((rep.start, rep.period))
            double = size << 1
            if n % double == 0 and n - s * double >= 0:
                self._mark(k, n - s * size, size)
                self._mark(k, n - (s - 1) * size, size)
            k += 1
            size = double

        if self._marked_count:
            self._tick_marked(n)
        self._ops += ops

        if cands:
            self._found = Found(leftmost_report(self.text, n, cands), n)
            return self._found
        return None

    def backtrack(self) -> Optional[Found]:
        """Undo the most recent read; returns the status after the undo."""
        if self._skipped:
            self._skipped -= 1
            self._ops += 1
            return self._found
        n_prev = len(self.text)
        if n_prev == 0:
            raise IndexError("backtrack on empty text")
        self.text.pop()
        n = n_prev - 1
        for slot in self._slots.values():
            slot.catcher.backtrack()
        self._ops += len(self._slots) + 1
        if self._marked_count:
            self._tick_marked(n)

        # reverse of the read-side grid refresh: the slot refreshed at
        # n_prev starts a countdown, the two it superseded come back
        s = self.s
        num = self._num
        den = self._den
        k = self.k_min
        size = 1 << k
        while n_prev % size == 0 and s * size <= n_prev:
            self._mark(k, n_prev, min(size, ceil_div(s * size * den, num)))
            double = size << 1
            if n_prev % double == 0 and n_prev - s * double >= 0:
                self._ensure_unmarked(k, n_prev - s * size)
                self._ensure_unmarked(k, n_prev - (s - 1) * size)
            k += 1
            size = double

        if self._found is not None and n < self._found.found_at_length:
            self._found = None
        return self._found

    def _key(self, k: int, n0: int) -> tuple[int, int, int, int]:
        size = 1 << k
        i = n0 - (self.s - 1) * size
        j = n0 - ceil_div(self.s * size * self._den, self._num)
        return k, i, j, size

    def _ensure_unmarked(self, k: int, n0: int) -> Optional[RepetitionReport]:
        """Create the (k, n0) slot, or clear its mark if it already exists."""
        k, i, j, size = self._key(k, n0)
        slot = self._slots.get((k, i, j))
        if slot is not None:
            if slot.marked:
                slot.marked = False
                slot.ttl = 0
                self._marked_count -= 1
                self._cover_stale = True
            return None
        catcher = Catcher(self.text, i, j, self.e, keep_history=True)
        self._slots[(k, i, j)] = _Slot(catcher, k, n0 - self.s * size + 1, i)
        self._fns_stale = True
        self._cover_stale = True
        return catcher.creation_report

    def _mark(self, k: int, n0: int, ttl: int) -> None:
        """Start (or restart) the removal countdown of the (k, n0) slot."""
        k, i, j, size = self._key(k, n0)
        slot = self._slots.get((k, i, j))
        if slot is None:
            # not reachable through the documented op sequences, but if the
            # slot is missing and can exist, rebuild it so the mark lands
            if j >= len(self.text):
                return
            catcher = Catcher(self.text, i, j, self.e, keep_history=True)
            slot = _Slot(catcher, k, n0 - self.s * size + 1, i)
            self._slots[(k, i, j)] = slot
            self._fns_stale = True
        if not slot.marked:
            self._marked_count += 1
            self._cover_stale = True
        slot.marked = True
        slot.ttl = ttl

    def _tick_marked(self, n: int) -> None:
        """Count down marked slots; drop the expired and the unusable."""
        doomed: list[tuple[int, int, int]] = []
        for key, slot in self._slots.items():
            if not slot.marked:
                continue
            slot.ttl -= 1
            if slot.ttl <= 0 or n < slot.pat_end:
                doomed.append(key)
        for key in doomed:
            slot = self._slots.pop(key)
            self._retired_ops += slot.catcher.ops
            self._marked_count -= 1
            self._fns_stale = True

    def _rebuild_step_fns(self) -> None:
        self._step_fns = [sl.catcher.read for sl in self._slots.values()]
        self._fns_stale = False

    # -- introspection used by tests and the benchmark harness --

    @property
    def slot_count(self) -> int:
        return len(self._slots)

    def level_census(self) -> dict[int, int]:
        """Live slot count per level, marked ones included."""
        census: dict[int, int] = {}
        for slot in self._slots.values():
            census[slot.level] = census.get(slot.level, 0) + 1
        return census

    def covered_upto(self) -> int:
        """Largest c such that unmarked slots cover [1..c] without a gap.

        Together with the direct scan the detector is complete while this
        reaches len(text) - naive_len_max.
        """
        if self._cover_stale:
            covered = 0
            for a, b in sorted((sl.seg_start, sl.seg_end)
                               for sl in self._slots.values() if not sl.marked):
                if a > covered + 1:
                    break
                if b > covered:
                    covered = b
            self._covered_upto = covered
            self._cover_stale = False
        return self._covered_upto

    def basic_ops(self) -> int:
        """Total basic steps: matcher moves, candidate updates, scan probes,
        and slot upkeep, including work done by slots since retired."""
        live = sum(sl.catcher.ops for sl in self._slots.values())
        return self._ops + self._retired_ops + live

    def __repr__(self) -> str:
        state = "found" if self._found else "free"
        return (f"DyadicDetector(e={self.e}, n={len(self.text)}, "
                f"slots={len(self._slots)}, {state})")
