"""Cost counters over growing inputs, as delimited rows and optional figures.

The stock input is the square-free ternary word from the uniform morphism
a -> abc, b -> ac, c -> b, so detectors stay Free and the counters reflect
steady-state maintenance cost rather than early termination.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .core import Exponent
from .dyadic import DyadicDetector
from .ordered import OrderedDetector

_RULES = {"a": "abc", "b": "ac", "c": "b"}


def square_free_word(n: int) -> str:
    """First n letters of the ternary square-free fixed point of a -> abc,
    b -> ac, c -> b."""
    if n < 0:
        raise ValueError("n must be non-negative")
    word = "a"
    while len(word) < n:
        word = "".join(_RULES[c] for c in word)
    return word[:n]


@dataclass(frozen=True)
class BenchRow:
    mode: str
    n: int
    basic_ops: int
    ns_per_letter: float


def _fresh(mode: str, e: Exponent):
    if mode == "dyadic":
        return DyadicDetector(e)
    if mode == "ordered":
        return OrderedDetector(e)
    raise ValueError(f"unknown mode {mode!r}")


def run_bench(e: Exponent, sizes: Iterable[int], mode: str = "dyadic",
              text: Optional[str] = None) -> list[BenchRow]:
    """Feed prefixes of the stock word (or `text`) to fresh detectors.

    Returns one row per size with the structural op counter and measured
    wall time per letter.
    """
    sizes = sorted(set(sizes))
    if not sizes:
        raise ValueError("need at least one size")
    if any(n < 1 for n in sizes):
        raise ValueError("sizes must be positive")
    word = text if text is not None else square_free_word(sizes[-1])
    if len(word) < sizes[-1]:
        raise ValueError("text shorter than the largest size")
    rows = []
    for n in sizes:
        det = _fresh(mode, e)
        read = det.read
        t0 = time.perf_counter_ns()
        for ch in word[:n]:
            read(ch)
        elapsed = time.perf_counter_ns() - t0
        rows.append(BenchRow(mode, n, det.basic_ops(), elapsed / n))
    return rows


def write_tsv(rows: Iterable[BenchRow], stream: TextIO) -> None:
    """One block per mode: a comment header, then n, basic_ops, ns_per_letter."""
    current = None
    for row in rows:
        if row.mode != current:
            current = row.mode
            stream.write(f"# mode={row.mode}\n")
        stream.write(f"{row.n}\t{row.basic_ops}\t{row.ns_per_letter:.1f}\n")


def render_figure(rows: Iterable[BenchRow], path: str) -> None:
    """Ops-per-letter against text length, one line per mode, written to path."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_mode: dict[str, list[BenchRow]] = {}
    for row in rows:
        by_mode.setdefault(row.mode, []).append(row)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for mode, mrows in by_mode.items():
        mrows = sorted(mrows, key=lambda r: r.n)
        ax.plot([r.n for r in mrows], [r.basic_ops / r.n for r in mrows],
                marker="o", label=mode)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("text length")
    ax.set_ylabel("basic ops per letter")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
