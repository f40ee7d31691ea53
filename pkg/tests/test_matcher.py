"""Online single-pattern matcher with integer snapshots."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from repfree import MatcherAutomaton


def naive_ends(pattern: str, text: str) -> set[int]:
    """1-based end positions of every occurrence of pattern in text."""
    m = len(pattern)
    return {
        i + m
        for i in range(len(text) - m + 1)
        if text[i:i + m] == pattern
    }


def drive(pattern: str, text: str) -> list[bool]:
    mat = MatcherAutomaton(pattern)
    return [mat.step(ch) for ch in text]


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        MatcherAutomaton("")


def test_fresh_snapshot_is_zero():
    assert MatcherAutomaton("ce").snapshot() == 0


def test_overlapping_occurrences():
    assert drive("aa", "aaa") == [False, True, True]


def test_single_letter_pattern_waits():
    mat = MatcherAutomaton("c")
    assert [mat.step(ch) for ch in "eorsuva"] == [False] * 7
    assert mat.step("c") is True


def test_prefix_mismatch_recovers():
    assert drive("ab", "aab") == [False, False, True]


def test_unknown_letter():
    assert drive("x", "y") == [False]


def test_snapshot_is_single_int():
    mat = MatcherAutomaton("abcab")
    for ch in "abc":
        mat.step(ch)
    snap = mat.snapshot()
    assert isinstance(snap, int)


def test_restore_replays_identically():
    mat = MatcherAutomaton("abab")
    for ch in "aba":
        mat.step(ch)
    snap = mat.snapshot()
    tail = [mat.step(ch) for ch in "babab"]
    mat.restore(snap)
    assert [mat.step(ch) for ch in "babab"] == tail


def test_exhaustive_binary_small():
    for plen in range(1, 4):
        for pat in map("".join, product("ab", repeat=plen)):
            for tlen in range(8):
                for text in map("".join, product("ab", repeat=tlen)):
                    got = drive(pat, text)
                    want = naive_ends(pat, text)
                    assert {i + 1 for i, hit in enumerate(got) if hit} == want


@given(
    st.text(alphabet="abc", min_size=1, max_size=8),
    st.text(alphabet="abc", max_size=24),
)
def test_matches_naive_scan(pattern, text):
    got = drive(pattern, text)
    assert {i + 1 for i, hit in enumerate(got) if hit} == naive_ends(
        pattern, text
    )


@given(
    st.text(alphabet="ab", min_size=1, max_size=6),
    st.text(alphabet="ab", max_size=12),
    st.text(alphabet="ab", max_size=12),
)
def test_snapshot_restore_fuzz(pattern, head, tail):
    mat = MatcherAutomaton(pattern)
    for ch in head:
        mat.step(ch)
    snap = mat.snapshot()
    first = [mat.step(ch) for ch in tail]
    mat.restore(snap)
    assert [mat.step(ch) for ch in tail] == first
