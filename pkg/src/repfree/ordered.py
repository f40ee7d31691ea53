"""Online first-repetition detection over ordered alphabets.

The detector keeps a suffix tree of the text read so far; the tree's pending
counter tells how long a repeated suffix the text currently has.  While that
value stays small, suffix repetitions are short and a direct period probe
finds them.  Once it grows, every possible repetition start falls inside a
window left of the text end, and a geometric family of pinned catchers covers
the window.  The window is rebuilt only when the live range drifts out of it,
so rebuild cost amortizes against reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .catcher import Catcher
from .core import (Exponent, Letter, RepetitionReport, TextBuffer, ceil_div,
                   leftmost_report, probe_short_periods)
from .suffix_tracker import SuffixTracker


def _cover_constants(e: Exponent) -> tuple[Fraction, Fraction, Fraction, int]:
    """Window geometry for exponent e.

    Returns (alpha, growth, cover_factor, m): each pinned window spans the
    alpha..1 portion of a range that grows by `growth` per catcher, and m + 1
    catchers suffice because growth**(m + 1) >= cover_factor.
    """
    alpha = Fraction(e.num + e.den, 2 * e.num)
    growth = Fraction(e.num + e.den, 2 * e.den)
    cover_factor = Fraction(5 * e.num - e.den, e.num - e.den)
    acc = growth
    m = 0
    while acc < cover_factor:
        acc *= growth
        m += 1
    return alpha, growth, cover_factor, m


@dataclass(frozen=True)
class CoverPlan:
    """Catcher parameters covering everything left of a fresh window."""

    alpha: Fraction
    growth: Fraction
    cover_factor: Fraction
    m: int
    params: tuple[tuple[int, int], ...]


def cover_build(n: int, span: int, e: Exponent) -> CoverPlan:
    """Plan catchers whose cover segments blanket (n - c*span .. n - span].

    The first window is pinned just left of position n - span and each later
    one is deeper by a factor of `growth`; the plan stops early once a window
    already covers down to position 1.  Rounding can leave a one-position gap
    between neighbouring segments, closed here by deepening j by one.  Raises
    ValueError when span is too small to give every window two positions.
    """
    if span < 1:
        raise ValueError("span must be positive")
    num, den = e.num, e.den
    alpha, growth, cover_factor, m = _cover_constants(e)

    params: list[tuple[int, int]] = []
    finished = False
    pw = Fraction(span)
    for _ in range(m + 1):
        i_k = n - ceil_div(pw.numerator, pw.denominator)
        deep = alpha * pw
        j_k = n - ceil_div(deep.numerator, deep.denominator)
        if i_k < 1:
            i_k = 1
        params.append((i_k, j_k))
        if num * (n - j_k) >= den * n:
            finished = True
            break
        pw *= growth

    # each segment must reach the next window's pin (or the overall target)
    target = n - max(0, n - ceil_div(cover_factor.numerator * span,
                                     cover_factor.denominator))
    for idx, (i_k, j_k) in enumerate(params):
        if idx + 1 < len(params):
            reach = n - params[idx + 1][0]
        elif finished:
            reach = n
        else:
            reach = target
        while num * (n - j_k) // den < reach:
            j_k -= 1
        if j_k - i_k + 1 < 2 or j_k >= n:
            raise ValueError(f"span {span} too small for a cover at n={n}")
        params[idx] = (i_k, j_k)
    return CoverPlan(alpha, growth, cover_factor, m, tuple(params))


class OrderedDetector:
    """Online first-repetition detector; letters only need equality and hashing."""

    __slots__ = ("e", "T0", "naive_len_max", "text", "tracker",
                 "_num", "_den", "_cells", "_naive_pmax", "_catchers",
                 "_l", "_r", "_found", "_ops", "_retired_ops", "_last_t",
                 "_prev_rn", "_work_units", "_rebuilds", "_rebuild_log",
                 "_last_plan", "_budget")

    def __init__(self, e: Exponent, log_rebuilds: bool = False) -> None:
        self.e = e
        num, den = e.num, e.den
        # threshold on the repeated-suffix value: below it repetitions stay
        # short enough to probe directly, above it window catchers take over
        self.T0 = 2 * ceil_div(4 * num, num - den) - 1
        self.naive_len_max = ceil_div(num * self.T0, num - den) - 1
        self.text = TextBuffer()
        self.tracker = SuffixTracker()
        self._num = num
        self._den = den
        self._cells = self.text._cells
        self._naive_pmax = self.naive_len_max * den // num
        self._catchers: list[Catcher] = []
        self._l = 0
        self._r = 0
        self._found: Optional[RepetitionReport] = None
        self._ops = 0
        self._retired_ops = 0
        self._last_t = 0
        self._prev_rn = 0
        self._work_units = 0
        self._rebuilds = 0
        self._rebuild_log: Optional[list] = [] if log_rebuilds else None
        self._last_plan: Optional[CoverPlan] = None
        self._budget = _cover_constants(e)[3] + 1

    def __len__(self) -> int:
        return len(self.text)

    @property
    def report(self) -> Optional[RepetitionReport]:
        return self._found

    @property
    def window(self) -> tuple[int, int]:
        """Current (l, r): repetition starts can only lie in (l..r]."""
        return self._l, self._r

    @property
    def last_t(self) -> int:
        """Repeated-suffix value after the most recent read."""
        return self._last_t

    @property
    def catcher_count(self) -> int:
        return len(self._catchers)

    @property
    def cover_budget(self) -> int:
        """Most catchers any rebuild may create."""
        return self._budget

    @property
    def rebuild_count(self) -> int:
        return self._rebuilds

    @property
    def work_units(self) -> int:
        """Reads plus window-frontier advances, the yardstick rebuilds amortize
        against."""
        return self._work_units

    @property
    def rebuild_log(self) -> Optional[list]:
        """Per rebuild (work_units, t, l, r), when logging was requested."""
        return self._rebuild_log

    @property
    def last_plan(self) -> Optional[CoverPlan]:
        return self._last_plan

    def read(self, letter: Letter) -> Optional[RepetitionReport]:
        """Consume one letter; report the first repetition once it exists.

        After a repetition is found the detector freezes and further reads
        return the same report without consuming anything.
        """
        if self._found is not None:
            return self._found
        text = self.text
        text.push(letter)
        n = len(text)
        t = self.tracker.push(letter)
        self._last_t = t
        r_n = n - t + 1
        self._work_units += 1 + (r_n - self._prev_rn
                                 if r_n > self._prev_rn else 0)
        self._prev_rn = r_n

        ops = 1
        cands: list[tuple[int, int]] = []
        if t == 1:
            # a letter the text has never held matches no pattern position
            # and kills every pending candidate; skip the full update
            for c in self._catchers:
                c.drop_candidates_for_novel_letter()
            ops += len(self._catchers)
        else:
            for c in self._catchers:
                rep = c.read()
                if rep is not None:
                    cands.append((rep.start, rep.period))
            ops += len(self._catchers)
            if t < self.T0:
                ops += probe_short_periods(self._cells, n, self._naive_pmax,
                                           self._num, self._den, cands)
            else:
                num, den = self._num, self._den
                l_n = n - ceil_div(num * t, num - den)
                if l_n < 0:
                    l_n = 0
                if (l_n < self._l or r_n > self._r
                        or n - self._r > 2 * (self._r - self._l)):
                    self._rebuild(n, t, cands)
        self._ops += ops

        if cands:
            self._found = leftmost_report(text, n, cands)
        return self._found

    def _rebuild(self, n: int, t: int, cands: list[tuple[int, int]]) -> None:
        num, den = self._num, self._den
        self._l = max(0, n - ceil_div(2 * num * t, num - den))
        self._r = n - ceil_div(t, 2)
        for c in self._catchers:
            self._retired_ops += c.ops
        plan = cover_build(n, n - self._r, self.e)
        self._last_plan = plan
        fresh: list[Catcher] = []
        for i, j in plan.params:
            c = Catcher(self.text, i, j, self.e)
            rep = c.creation_report
            if rep is not None and rep.end == n:
                cands.append((rep.start, rep.period))
            fresh.append(c)
        self._catchers = fresh
        self._rebuilds += 1
        if self._rebuild_log is not None:
            self._rebuild_log.append((self._work_units, t, self._l, self._r))

    def basic_ops(self) -> int:
        """Total basic steps: tracker updates, matcher moves, candidate
        updates, probes, and all work done by catchers since retired."""
        live = sum(c.ops for c in self._catchers)
        return self._ops + self._retired_ops + live + self.tracker.ops
