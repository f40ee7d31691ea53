"""Catcher: watches one window of suffix-repetition lengths online.

A catcher is pinned to positions i <= j of the text.  With h = (j-i+1)/2 it
runs a matcher for the half-window pattern text[i..i+ceil(h)-1] over the
letters after i.  Every occurrence ending at position n spawns a candidate
period p = (n - ceil(h) + 1) - i with a left frontier l_p = i - 1; each later
letter either kills a candidate (period broken at the right end) or budgets a
few more left extensions, and the candidate fires once n - l_p reaches e * p.

The candidate list plus the matcher state is the whole mutable state, so one
popped snapshot per letter makes the catcher fully backtrackable.  Snapshots
are packed into flat int arrays: a 1-int record when the candidate list was
untouched that step, a full dump otherwise.
"""

from __future__ import annotations

from array import array
from typing import Optional

from .core import Exponent, Letter, RepetitionReport, TextBuffer, ceil_div
from .matcher import MatcherAutomaton


class Catcher:
    __slots__ = (
        "text", "i", "j", "h_ceil", "h_floor", "matcher", "keep_history",
        "creation_report", "ops",
        "_cells", "_num", "_den", "_plen", "_d", "_idx", "_trans", "_state",
        "_P", "_pos", "_pat_end", "_hist_vals", "_hist_lens",
    )

    def __init__(self, text: TextBuffer, i: int, j: int, e: Exponent,
                 keep_history: bool = False) -> None:
        n = len(text)
        if not (1 <= i <= j <= n):
            raise ValueError(f"need 1 <= i <= j <= n, got i={i} j={j} n={n}")
        width = j - i + 1
        if width < 2:
            raise ValueError("window must span at least two positions (i < j)")
        self.text = text
        self.i = i
        self.j = j
        self.h_ceil = (width + 1) // 2
        self.h_floor = width // 2
        self._cells = text._cells
        self._num = e.num
        self._den = e.den

        pattern = self._cells[i:i + self.h_ceil]
        self._pat_end = i + self.h_ceil - 1
        matcher = MatcherAutomaton(pattern)
        self.matcher = matcher
        self._plen = matcher._plen
        self._d = matcher._d
        self._idx = matcher._idx
        self._trans = matcher._trans
        self._state = 0

        self._P: list[list[int]] = []
        self._pos = i
        self.keep_history = keep_history
        if keep_history:
            self._hist_vals = array("i")
            self._hist_lens = array("i")
        else:
            self._hist_vals = None
            self._hist_lens = None
        self.ops = 0

        # replay everything after i so P and the history reflect the text as
        # if the catcher had existed since position i
        self.creation_report = None
        for _ in range(i + 1, n + 1):
            rep = self.read()
            if rep is not None and self.creation_report is None:
                self.creation_report = rep

    @property
    def position(self) -> int:
        """Rightmost text position this catcher has consumed."""
        return self._pos

    @property
    def candidates(self) -> list[tuple[int, int]]:
        """Live (period, left-frontier) pairs, for inspection."""
        return [(p, lp) for p, lp in self._P]

    def read(self) -> Optional[RepetitionReport]:
        """Consume the next letter; report a repetition ending there, if any."""
        n = self._pos + 1
        self._pos = n
        st = self._state
        a = self._idx.get(self._cells[n])
        nst = self._trans[st * self._d + a] if a is not None else 0
        if nst == self._plen or self._P:
            return self._read_full(n, st, nst)
        # common case: no occurrence, no candidates
        lens = self._hist_lens
        if lens is not None:
            self._hist_vals.append(st)
            lens.append(1)
        self._state = nst
        self.ops += 1
        return None

    def _read_full(self, n: int, old_state: int, new_state: int) -> Optional[RepetitionReport]:
        lens = self._hist_lens
        P = self._P
        if lens is not None:
            vals = self._hist_vals
            vals.append(old_state)
            vals.append(len(P))
            for pair in P:
                vals.append(pair[0])
                vals.append(pair[1])
            lens.append(2 + 2 * len(P))
        self._state = new_state
        ops = 1
        if new_state == self._plen:
            P = list(P)
            P.append([n - self.h_ceil + 1 - self.i, self.i - 1])
            ops += 1
        cells = self._cells
        num = self._num
        den = self._den
        hfloor = self.h_floor
        last = cells[n]
        best: Optional[tuple[int, int]] = None
        keep: list[list[int]] = []
        for cand in P:
            p = cand[0]
            ops += 1
            if last != cells[n - p]:
                continue
            lp = cand[1]
            if lp > 0 and cells[lp] == cells[lp + p]:
                r = ceil_div((num - den) * p, den * hfloor)
                while r > 0 and lp > 0 and cells[lp] == cells[lp + p]:
                    lp -= 1
                    r -= 1
                    ops += 1
                cand[1] = lp
            if (n - lp) * den >= num * p:
                key = (lp + 1, p)
                if best is None or key < best:
                    best = key
            keep.append(cand)
        self._P = keep
        self.ops += ops
        if best is None:
            return None
        return RepetitionReport(best[0], n, best[1])

    def backtrack(self) -> None:
        """Undo the most recent read, restoring matcher state and candidates."""
        lens = self._hist_lens
        if lens is None:
            raise RuntimeError("catcher was created without history")
        if not lens:
            raise RuntimeError("no history left: catcher is at its creation point")
        vals = self._hist_vals
        size = lens.pop()
        if size == 1:
            self._state = vals.pop()
        else:
            base = len(vals) - size
            self._state = vals[base]
            count = vals[base + 1]
            self._P = [[vals[base + 2 + 2 * t], vals[base + 3 + 2 * t]] for t in range(count)]
            del vals[base:]
        self._pos -= 1
        self.ops += 1

    def drop_candidates_for_novel_letter(self) -> None:
        """Advance past a letter that has never occurred before.

        Such a letter matches nothing: the matcher falls to state 0 and every
        candidate dies at its right end.  Equivalent to read() but O(1).
        """
        n = self._pos + 1
        lens = self._hist_lens
        if lens is not None:
            P = self._P
            if P:
                vals = self._hist_vals
                vals.append(self._state)
                vals.append(len(P))
                for pair in P:
                    vals.append(pair[0])
                    vals.append(pair[1])
                lens.append(2 + 2 * len(P))
            else:
                self._hist_vals.append(self._state)
                lens.append(1)
        self._pos = n
        self._state = 0
        if self._P:
            self._P = []
        self.ops += 1

    def __repr__(self) -> str:
        return (f"Catcher(i={self.i}, j={self.j}, pos={self._pos}, "
                f"candidates={self.candidates})")


def covers_segment(i: int, j: int, n: int, l: int, r: int, e: Exponent) -> bool:
    """Would a catcher at (i, j) catch every repetition suffix starting in [l..r]?

    Holds when n - i < n - r + 1 <= n - l + 1 <= e * (n - j); the right-hand
    comparison is exact: den * (n - l + 1) <= num * (n - j).
    """
    if not (1 <= l <= r <= n):
        raise ValueError(f"bad segment [{l}..{r}] for n={n}")
    return r <= i and (n - l + 1) * e.den <= e.num * (n - j)
