import pytest
from hypothesis import given, strategies as st

from rackenum.words import (
    concat,
    cyclic_reduce,
    invert_word,
    letter_key,
    minimal_cyclic_representative,
    reduce_word,
    rotations,
)

# letters over three generators
letters = st.integers(min_value=-3, max_value=3).filter(lambda y: y != 0)
letter_seqs = st.lists(letters, max_size=64)


def test_reduce_forced_cancellation():
    assert reduce_word((1, -1)) == ()
    assert reduce_word(()) == ()


def test_reduce_nested_cancellation():
    # b ~a ~b ~a ~b b b a b a ~b ~b  ->  b ~a ~b ~a b a b a ~b ~b
    raw = (2, -1, -2, -1, -2, 2, 2, 1, 2, 1, -2, -2)
    assert reduce_word(raw) == (2, -1, -2, -1, 2, 1, 2, 1, -2, -2)


def test_reduce_rejects_zero():
    with pytest.raises(ValueError):
        reduce_word((1, 0))


def test_invert_examples():
    assert invert_word((2, 1)) == (-1, -2)
    assert invert_word(()) == ()
    assert invert_word((1, -2)) == (2, -1)


@given(letter_seqs)
def test_reduce_idempotent_and_reduced(seq):
    word = reduce_word(seq)
    assert reduce_word(word) == word
    assert all(word[i] != -word[i + 1] for i in range(len(word) - 1))


@given(letter_seqs)
def test_invert_involution_and_cancellation(seq):
    word = reduce_word(seq)
    assert invert_word(invert_word(word)) == word
    assert concat(word, invert_word(word)) == ()


def test_letter_order():
    # x1 < x2 < x3 < ~x3 < ~x2 < ~x1
    keys = [letter_key(y, 3) for y in (1, 2, 3, -3, -2, -1)]
    assert keys == sorted(keys)
    assert len(set(keys)) == 6


def test_minimal_cyclic_exact_conversions():
    # the two secondary words of the stalling two-generator quandle
    first = (2, -1, -2, -1, -2, 1, 2, 1, 2, 1, -2, -1)
    second = (2, -1, -2, -1, 2, 1, 2, 1, -2, -2)
    assert minimal_cyclic_representative(first, 2) == (1, 2, 1, 2, 1, -2, -1, 2, -1, -2, -1, -2)
    assert minimal_cyclic_representative(second, 2) == (1, 2, 1, 2, -1, -2, -1, -2)


def test_minimal_cyclic_single_letter():
    assert minimal_cyclic_representative((1,), 2) == (1,)


def test_minimal_cyclic_rejects_empty():
    with pytest.raises(ValueError):
        minimal_cyclic_representative((), 2)


cyclic_words = (
    st.lists(letters, min_size=1, max_size=16)
    .map(reduce_word)
    .map(cyclic_reduce)
    .filter(lambda w: len(w) >= 1)
)


@given(cyclic_words, st.integers(min_value=0, max_value=15))
def test_minimal_cyclic_rotation_invariant(word, shift):
    shift %= len(word)
    rotated = word[shift:] + word[:shift]
    assert minimal_cyclic_representative(rotated, 3) == minimal_cyclic_representative(word, 3)


@given(cyclic_words)
def test_minimal_cyclic_inversion_invariant(word):
    assert minimal_cyclic_representative(invert_word(word), 3) == minimal_cyclic_representative(word, 3)


@given(cyclic_words)
def test_minimal_cyclic_is_a_rotation_of_input_or_inverse(word):
    out = minimal_cyclic_representative(word, 3)
    assert out in set(rotations(word)) | set(rotations(invert_word(word)))
