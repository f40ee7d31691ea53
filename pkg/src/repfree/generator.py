"""Random e-repetition-free word generation driven by the backtracking detector.

Two policies share the same loop shape: draw a letter, feed the detector,
and undo on detection.  The retry policy remembers rejected letters per
position and backs off a position when every letter failed there, so it
explores the whole tree and exhausts only when no word of the target length
exists.  The period-cut policy instead removes the whole closing period and
keeps drawing, trading completeness for a different output distribution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import Exponent, Letter
from .dyadic import DyadicDetector

POLICIES = ("retry", "period-cut")


@dataclass(frozen=True)
class GeneratorConfig:
    e: Exponent
    alphabet: Sequence[Letter]
    target_length: int
    seed: int
    max_steps: int = 1_000_000
    policy: str = "retry"

    def __post_init__(self) -> None:
        if not self.alphabet:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet letters must be pairwise distinct")
        if self.target_length < 1:
            raise ValueError("target_length must be positive")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}")


@dataclass(frozen=True)
class GenerationResult:
    word: tuple
    exhausted: bool
    steps: int

    def __len__(self) -> int:
        return len(self.word)


def generate(cfg: GeneratorConfig) -> GenerationResult:
    """Build a random e-repetition-free word of cfg.target_length.

    Draws are uniform and reproducible from cfg.seed.  A step is one letter
    placement attempt; when cfg.max_steps runs out, or the retry policy has
    rejected every continuation, the longest prefix ever reached is returned
    with exhausted=True.  Any returned word is e-repetition-free: it is a
    prefix of a text the detector accepted.
    """
    if cfg.policy == "retry":
        return _generate_retry(cfg)
    return _generate_period_cut(cfg)


def _generate_retry(cfg: GeneratorConfig) -> GenerationResult:
    rng = random.Random(cfg.seed)
    det = DyadicDetector(cfg.e)
    cur: list = []
    best: tuple = ()
    # rejected[d] = letters that failed at position d+1 under the current prefix
    rejected: list[set] = [set()]
    steps = 0
    while len(cur) < cfg.target_length and steps < cfg.max_steps:
        choices = [a for a in cfg.alphabet if a not in rejected[-1]]
        if not choices:
            if not cur:
                return GenerationResult(best, True, steps)
            x = cur.pop()
            det.backtrack()
            rejected.pop()
            rejected[-1].add(x)
            continue
        x = choices[rng.randrange(len(choices))]
        steps += 1
        if det.read(x) is None:
            cur.append(x)
            rejected.append(set())
            if len(cur) > len(best):
                best = tuple(cur)
        else:
            det.backtrack()
            rejected[-1].add(x)
    if len(cur) >= cfg.target_length:
        return GenerationResult(tuple(cur), False, steps)
    return GenerationResult(best, True, steps)


def _generate_period_cut(cfg: GeneratorConfig) -> GenerationResult:
    rng = random.Random(cfg.seed)
    det = DyadicDetector(cfg.e)
    alphabet = list(cfg.alphabet)
    cur: list = []
    best: tuple = ()
    steps = 0
    while len(cur) < cfg.target_length and steps < cfg.max_steps:
        x = alphabet[rng.randrange(len(alphabet))]
        steps += 1
        status = det.read(x)
        if status is None:
            cur.append(x)
            if len(cur) > len(best):
                best = tuple(cur)
        else:
            # drop the closing period: the new letter plus period-1 more
            period = status.report.period
            for _ in range(period):
                det.backtrack()
            if period > 1:
                del cur[len(cur) - (period - 1):]
    if len(cur) >= cfg.target_length:
        return GenerationResult(tuple(cur), False, steps)
    return GenerationResult(best, True, steps)
