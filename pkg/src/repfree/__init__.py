"""Online detection of repetitions of exponent >= e, with backtracking.

Public surface: exact rational exponents, the backtracking detector built on
a dyadic catcher grid, the ordered-alphabet detector built on a suffix
tracker, the pinned-window catcher itself, a brute-force oracle, a random
repetition-free word generator, and counter benchmarks.
"""

from .bench import BenchRow, run_bench, square_free_word
from .catcher import Catcher, covers_segment
from .core import (Exponent, Letter, RepetitionReport, TextBuffer, ceil_div,
                   cells_of, exponent_parse, find_witness_period, is_period,
                   leftmost_report, probe_short_periods, reaches_exponent)
from .dyadic import (DyadicDetector, Found, level_boundary, level_constant,
                     level_params, min_level)
from .generator import GenerationResult, GeneratorConfig, generate
from .matcher import MatcherAutomaton
from .oracle import (OracleResult, oracle_first_repetition, oracle_is_free,
                     oracle_unioccurrent)
from .ordered import CoverPlan, OrderedDetector, cover_build
from .suffix_tracker import SuffixTracker

__version__ = "0.1.0"

__all__ = [
    "BenchRow", "Catcher", "CoverPlan", "DyadicDetector", "Exponent",
    "Found", "GenerationResult", "GeneratorConfig", "Letter",
    "MatcherAutomaton", "OracleResult", "OrderedDetector",
    "RepetitionReport", "SuffixTracker", "TextBuffer", "ceil_div",
    "cells_of", "covers_segment", "cover_build", "exponent_parse",
    "find_witness_period", "generate", "is_period", "leftmost_report",
    "oracle_first_repetition", "oracle_is_free", "oracle_unioccurrent",
    "probe_short_periods", "reaches_exponent", "run_bench",
    "square_free_word", "__version__",
]
