"""Single-pattern matching automaton with an integer snapshot.

The automaton state is the length of the longest pattern prefix that is a
suffix of the letters fed so far; an occurrence ends at the current letter
exactly when the state equals the pattern length.  Precomputing the full
transition table makes every step a single lookup, so saving and restoring
the matcher is just copying one integer -- nothing has to be replayed.
"""

from __future__ import annotations

from array import array
from typing import Sequence

from .core import Letter


class MatcherAutomaton:
    __slots__ = ("pattern", "_plen", "_d", "_idx", "_trans", "state")

    def __init__(self, pattern: Sequence[Letter]) -> None:
        pattern = list(pattern)
        if not pattern:
            raise ValueError("empty pattern")
        self.pattern = pattern
        plen = len(pattern)
        self._plen = plen

        idx: dict = {}
        for c in pattern:
            if c not in idx:
                idx[c] = len(idx)
        d = len(idx)
        self._idx = idx
        self._d = d

        # border[q] = length of the longest proper border of pattern[:q]
        border = [0] * (plen + 1)
        k = 0
        for q in range(1, plen):
            while k and pattern[q] != pattern[k]:
                k = border[k]
            if pattern[q] == pattern[k]:
                k += 1
            border[q + 1] = k

        trans = array("i", [0] * ((plen + 1) * d))
        for c, a in idx.items():
            trans[a] = 1 if pattern[0] == c else 0
        for q in range(1, plen + 1):
            base = q * d
            fall = border[q] * d
            for c, a in idx.items():
                if q < plen and pattern[q] == c:
                    trans[base + a] = q + 1
                else:
                    trans[base + a] = trans[fall + a]
        self._trans = trans
        self.state = 0

    def step(self, letter: Letter) -> bool:
        """Feed one letter; True when a pattern occurrence ends here."""
        a = self._idx.get(letter)
        if a is None:
            self.state = 0
            return self._plen == 0
        self.state = self._trans[self.state * self._d + a]
        return self.state == self._plen

    def snapshot(self) -> int:
        return self.state

    def restore(self, snap: int) -> None:
        assert 0 <= snap <= self._plen, "snapshot from a different matcher"
        self.state = snap

    def __repr__(self) -> str:
        return f"MatcherAutomaton(pattern={self.pattern!r}, state={self.state})"
