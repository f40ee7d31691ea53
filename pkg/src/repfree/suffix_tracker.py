"""Shortest-unioccurrent-suffix lengths from an online suffix tree.

After pushing letter n the tracker reports t_n, the length of the shortest
suffix of text[1..n] that does not occur in text[1..n-1].  The suffix tree is
grown with the active-point construction: the suffixes still pending
insertion after a step are exactly those occurring elsewhere already, so
t_n = pending + 1.

Nodes live in parallel arrays; children are per-node dicts created lazily
(leaves carry None).  Leaf edges are open-ended, closed implicitly by the
current length.
"""

from __future__ import annotations

from array import array
from typing import Optional

from .core import Letter


class SuffixTracker:
    __slots__ = ("text", "ops", "_children", "_start", "_end", "_slink",
                 "_active_node", "_active_edge", "_active_len", "_pending")

    def __init__(self) -> None:
        self.text: list = []
        self.ops = 0
        self._children: list[Optional[dict]] = [{}]
        self._start = array("i", [-1])
        self._end = array("i", [-1])   # -1 = open (leaf)
        self._slink = array("i", [0])
        self._active_node = 0
        self._active_edge = 0          # index into self.text
        self._active_len = 0
        self._pending = 0

    def __len__(self) -> int:
        return len(self.text)

    def _new_node(self, start: int, end: int) -> int:
        self._children.append(None if end == -1 else {})
        self._start.append(start)
        self._end.append(end)
        self._slink.append(0)
        return len(self._start) - 1

    def _edge_len(self, v: int, pos: int) -> int:
        end = self._end[v]
        return (pos + 1 - self._start[v]) if end == -1 else (end - self._start[v])

    def push(self, letter: Letter) -> int:
        """Append one letter; return the shortest-unioccurrent-suffix length."""
        text = self.text
        pos = len(text)
        text.append(letter)
        children = self._children
        start_arr = self._start
        slink = self._slink

        self._pending += 1
        need_link = 0
        node = self._active_node
        edge = self._active_edge
        alen = self._active_len

        while self._pending:
            self.ops += 1
            if alen == 0:
                edge = pos
            kids = children[node]
            nxt = kids.get(text[edge]) if kids is not None else None
            if nxt is None:
                # no edge: insert a leaf here
                leaf = self._new_node(pos, -1)
                if kids is None:
                    kids = {}
                    children[node] = kids
                kids[text[edge]] = leaf
                if need_link:
                    slink[need_link] = node
                    need_link = 0
            else:
                span = self._edge_len(nxt, pos)
                if alen >= span:
                    # walk down one node and retry
                    edge += span
                    alen -= span
                    node = nxt
                    continue
                if text[start_arr[nxt] + alen] == letter:
                    # suffix already present: stop, it stays pending
                    alen += 1
                    if need_link:
                        slink[need_link] = node
                    break
                # split the edge and hang a new leaf off the split point
                mid = self._new_node(start_arr[nxt], start_arr[nxt] + alen)
                leaf = self._new_node(pos, -1)
                children[node][text[edge]] = mid
                start_arr[nxt] += alen
                mkids = children[mid]
                mkids[text[start_arr[nxt]]] = nxt
                mkids[letter] = leaf
                if need_link:
                    slink[need_link] = mid
                need_link = mid
            self._pending -= 1
            if node == 0 and alen > 0:
                alen -= 1
                edge = pos - self._pending + 1
            else:
                node = slink[node]

        self._active_node = node
        self._active_edge = edge
        self._active_len = alen
        return self._pending + 1
