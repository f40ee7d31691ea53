"""Window-pinned catcher: creation replay, reads, backtracking, coverage."""

import random

import pytest

from repfree import (
    Catcher,
    Exponent,
    RepetitionReport,
    TextBuffer,
    covers_segment,
    find_witness_period,
    is_period,
    reaches_exponent,
)

from _util import free_words

E2 = Exponent(2)
E32 = Exponent(3, 2)


def feed(buf: TextBuffer, cat: Catcher, letters):
    out = []
    for ch in letters:
        buf.push(ch)
        out.append(cat.read())
    return out


class TestCreation:
    def test_half_window_pattern_and_empty_candidates(self):
        buf = TextBuffer("xxxxaceorsuv")
        cat = Catcher(buf, 6, 7, E32)
        assert cat.matcher.pattern == ["c"]
        assert cat.candidates == []
        assert cat.creation_report is None
        assert cat.position == 12

    def test_window_may_end_at_text_boundary(self):
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2)
        assert cat.matcher.pattern == ["a"]
        assert cat.candidates == []

    def test_single_position_window_rejected(self):
        buf = TextBuffer("abc")
        with pytest.raises(ValueError):
            Catcher(buf, 2, 2, E2)

    def test_out_of_range_rejected(self):
        buf = TextBuffer("abc")
        for i, j in ((0, 2), (2, 4), (3, 2)):
            with pytest.raises(ValueError):
                Catcher(buf, i, j, E2)

    def test_replay_reports_existing_repetition(self):
        buf = TextBuffer("abab")
        cat = Catcher(buf, 1, 2, E2)
        assert cat.creation_report == RepetitionReport(1, 4, 2)


class TestRead:
    def test_long_overlap_trace(self):
        buf = TextBuffer("xxxxaceorsuv")
        cat = Catcher(buf, 6, 7, E32)

        buf.push("a")
        assert cat.read() is None
        assert cat.candidates == []

        # occurrence of the pattern spawns period 8; the left frontier
        # extends from 5 to 4 within the same step and then sticks
        buf.push("c")
        assert cat.read() is None
        assert cat.candidates == [(8, 4)]

        buf.push("e")
        assert cat.read() is None
        assert cat.candidates == [(8, 4)]

        buf.push("o")
        assert cat.read() == RepetitionReport(5, 16, 8)

    def test_square_fires_at_double_length(self):
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2)
        buf.push("a")
        assert cat.read() is None
        assert cat.candidates == [(2, 0)]
        buf.push("b")
        assert cat.read() == RepetitionReport(1, 4, 2)

    def test_candidate_dies_on_period_break(self):
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2)
        buf.push("a")
        assert cat.read() is None
        assert cat.candidates == [(2, 0)]
        buf.push("a")
        # the period-2 candidate dies; the new occurrence legitimately opens
        # period 3, which is what later catches "abaaba"
        assert cat.read() is None
        assert (2, 0) not in cat.candidates
        assert cat.candidates == [(3, 0)]

    def test_novel_letter_clears_candidates(self):
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2)
        buf.push("a")
        cat.read()
        assert cat.candidates == [(2, 0)]
        buf.push("z")
        cat.drop_candidates_for_novel_letter()
        assert cat.candidates == []
        assert cat.position == 4


class TestBacktrack:
    def test_requires_history(self):
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2)
        with pytest.raises(RuntimeError):
            cat.backtrack()

    def test_unwinds_through_replayed_reads_then_stops(self):
        # creation replay populates history, so a fresh catcher can still
        # backtrack below its creation length, down to position i
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2, keep_history=True)
        cat.backtrack()
        assert cat.position == 1
        with pytest.raises(RuntimeError):
            cat.backtrack()

    def test_read_undo_read_is_deterministic(self):
        buf = TextBuffer("ab")
        cat = Catcher(buf, 1, 2, E2, keep_history=True)
        buf.push("a")
        cat.read()
        first = cat.candidates
        cat.backtrack()
        buf.pop()
        buf.push("a")
        cat.read()
        assert cat.candidates == first

    def test_full_unwind_restores_creation_state(self):
        buf = TextBuffer("xxxxaceorsuv")
        cat = Catcher(buf, 6, 7, E32, keep_history=True)
        feed(buf, cat, "aceo")
        for _ in range(4):
            cat.backtrack()
            buf.pop()
        assert cat.candidates == []
        assert cat.position == 12

    def test_fuzz_matches_fresh_catcher(self):
        rng = random.Random(11)
        for trial in range(40):
            base = "".join(rng.choice("ab") for _ in range(rng.randint(3, 8)))
            n0 = len(base)
            i = rng.randint(1, n0 - 1)
            j = rng.randint(i + 1, n0)
            buf = TextBuffer(base)
            cat = Catcher(buf, i, j, E2, keep_history=True)
            for _ in range(60):
                if cat.position > n0 and rng.random() < 0.4:
                    cat.backtrack()
                    buf.pop()
                else:
                    buf.push(rng.choice("ab"))
                    cat.read()
            fresh = Catcher(buf, i, j, E2)
            assert cat.candidates == fresh.candidates
            tail = [rng.choice("ab") for _ in range(6)]
            got = feed(buf, cat, tail)
            for _ in range(6):
                buf.pop()
            assert feed(buf, fresh, tail) == got


class TestCoversSegment:
    def test_pinned_window(self):
        # chain evaluates as 10 < 11 and 2*12 <= 3*9
        assert covers_segment(6, 7, 16, 5, 6, E32)
        assert covers_segment(6, 7, 16, 4, 6, E32)
        assert not covers_segment(6, 7, 16, 3, 6, E32)
        assert not covers_segment(6, 7, 16, 5, 7, E32)

    def test_last_position_window_never_covers_the_end(self):
        for e in (E2, E32, Exponent(3)):
            assert not covers_segment(9, 9, 10, 5, 10, e)

    def test_power_of_two_grid_window(self):
        # i = n - (s-1)*2^k, j = n - ceil((s/e)*2^k) at s=3, k=2, n=100
        assert covers_segment(92, 94, 100, 89, 92, E2)
        assert not covers_segment(92, 94, 100, 88, 92, E2)
        assert not covers_segment(92, 94, 100, 89, 93, E2)

    def test_rejects_bad_segment(self):
        with pytest.raises(ValueError):
            covers_segment(2, 3, 4, 3, 2, E2)
        with pytest.raises(ValueError):
            covers_segment(2, 3, 4, 0, 2, E2)


def repetition_suffix_starts(word: str, e: Exponent) -> set[int]:
    n = len(word)
    return {
        start
        for start in range(1, n)
        if find_witness_period(word, start, n, e) is not None
    }


@pytest.mark.parametrize("e", [E32, E2], ids=str)
def test_coverage_completeness_and_soundness(e):
    """Whatever starts inside a covered segment is caught, and every report
    is a genuine repetition; candidate lists stay within their size bound."""
    for w in free_words("abc", 8, e):
        if len(w) < 2:
            continue
        n = len(w) + 1
        for x in "abc":
            v = w + x
            starts = repetition_suffix_starts(v, e)
            buf = TextBuffer(w)
            for i in range(1, n - 1):
                for j in range(i + 1, n):
                    cat = Catcher(buf, i, j, e)
                    assert cat.creation_report is None
                    buf.push(x)
                    rep = cat.read()
                    buf.pop()

                    if rep is not None:
                        assert rep.end == n
                        assert is_period(v, rep.start, rep.end, rep.period)
                        assert reaches_exponent(rep.length, rep.period, e)

                    kmax = e.num * (n - j) // e.den
                    lo = max(1, n - kmax + 1)
                    if any(lo <= s <= i for s in starts):
                        assert rep is not None

                    bound = 2 * e.num * (n - i) + (j - i + 1) * e.den
                    assert len(cat.candidates) * (j - i + 1) * e.den <= bound
