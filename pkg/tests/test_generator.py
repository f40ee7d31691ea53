"""Random repetition-free word generation under both retry policies."""

import pytest

from repfree import (
    Exponent,
    GenerationResult,
    GeneratorConfig,
    generate,
    oracle_is_free,
)

from _util import drive_dyadic, drive_ordered

E2 = Exponent(2)


def cfg(**kw):
    base = dict(e=E2, alphabet=("a", "b", "c"), target_length=50, seed=1)
    base.update(kw)
    return GeneratorConfig(**base)


class TestConfigValidation:
    def test_empty_alphabet(self):
        with pytest.raises(ValueError):
            cfg(alphabet=())

    def test_duplicate_letters(self):
        with pytest.raises(ValueError):
            cfg(alphabet=("a", "b", "a"))

    def test_nonpositive_target(self):
        with pytest.raises(ValueError):
            cfg(target_length=0)

    def test_nonpositive_step_budget(self):
        with pytest.raises(ValueError):
            cfg(max_steps=0)

    def test_unknown_policy(self):
        with pytest.raises(ValueError):
            cfg(policy="bogus")


class TestRetryPolicy:
    def test_square_free_ternary(self):
        result = generate(cfg(target_length=100, seed=42))
        assert not result.exhausted
        assert len(result) == 100
        word = "".join(result.word)
        assert oracle_is_free(word, E2)

    def test_cube_free_binary(self):
        result = generate(
            cfg(e=Exponent(3), alphabet=("a", "b"), target_length=100, seed=3)
        )
        assert not result.exhausted
        word = "".join(result.word)
        assert oracle_is_free(word, Exponent(3))
        assert drive_ordered(word, Exponent(3)) is None
        assert drive_dyadic(word, Exponent(3)) is None

    def test_binary_squares_block_at_three(self):
        result = generate(cfg(alphabet=("a", "b"), target_length=10, seed=0))
        assert result.exhausted
        assert len(result) == 3

    def test_single_letter_blocks_at_one(self):
        result = generate(cfg(alphabet=("a",), target_length=5, seed=0))
        assert result.exhausted
        assert result.word == ("a",)

    def test_same_seed_same_word(self):
        a = generate(cfg(target_length=80, seed=9))
        b = generate(cfg(target_length=80, seed=9))
        assert a == b

    def test_step_budget_is_respected(self):
        result = generate(cfg(target_length=100, max_steps=5, seed=4))
        assert result.exhausted
        assert result.steps <= 5
        assert len(result) <= 5


class TestPeriodCutPolicy:
    def test_square_free_ternary(self):
        result = generate(cfg(target_length=100, seed=42, policy="period-cut"))
        assert not result.exhausted
        assert oracle_is_free("".join(result.word), E2)

    def test_deterministic(self):
        a = generate(cfg(target_length=60, seed=5, policy="period-cut"))
        b = generate(cfg(target_length=60, seed=5, policy="period-cut"))
        assert a == b

    def test_binary_squares_spin_until_budget(self):
        result = generate(
            cfg(alphabet=("a", "b"), target_length=10, seed=1,
                policy="period-cut", max_steps=2000)
        )
        assert result.exhausted
        assert len(result) <= 3


def test_result_value_shape():
    result = generate(cfg(target_length=20, seed=2))
    assert isinstance(result, GenerationResult)
    assert isinstance(result.word, tuple)
    assert set(result.word) <= {"a", "b", "c"}
    assert result.steps > 0
