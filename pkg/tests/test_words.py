import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from handlebody_mcg.words import (
    Alphabet,
    WordError,
    are_conjugate,
    commutator,
    conjugate,
    cyclic_reduce,
    format_word,
    invert,
    multiply,
    parse_word,
    product,
    reduce,
    solve_conjugator,
)

from conftest import random_word

A = Alphabet(("a", "b", "c"))


def w(text):
    return A.parse(text)


letters = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=15)
words = letters.map(lambda xs: reduce(A, xs))


def test_cancellation_examples():
    assert w("a a^-1").is_identity()
    assert w("a b b^-1 a") == w("a a")
    r = w("a b c^-1")
    assert reduce(A, r.raw) == r


def test_multiply_examples():
    assert multiply(w("a b"), w("b^-1 c")) == w("a c")
    assert multiply(w("a b"), A.identity()) == w("a b")
    assert multiply(w("a b c"), invert(w("a b c"))).is_identity()


def test_invert_conjugate_cyclic():
    assert invert(w("a b^-1")) == w("b a^-1")
    core, c = cyclic_reduce(w("b a b^-1"))
    assert core == w("a") and c == w("b")
    assert conjugate(w("a"), A.identity()) == w("a")


def test_solve_conjugator_examples():
    assert solve_conjugator(w("a"), w("b a b^-1")) == w("b")
    assert solve_conjugator(w("a"), w("b")) is None
    c = solve_conjugator(w("a b"), w("b a"))
    assert conjugate(w("a b"), c) == w("b a")


def test_alphabet_mismatch_raises():
    B = Alphabet(("a", "b"))
    with pytest.raises(WordError):
        multiply(w("a"), B.parse("a"))


def test_bad_input():
    with pytest.raises(WordError):
        A.parse("a q")
    with pytest.raises(WordError):
        A.parse("a^x")
    with pytest.raises(WordError):
        Alphabet(("a", "a"))
    with pytest.raises(WordError):
        reduce(A, [(5, 1)])


def test_text_round_trip():
    for text in ["1", "a", "a^-1 b c", "c^-1 c^-1 a"]:
        assert format_word(parse_word(A, text)) == text
    assert parse_word(A, "a^3 * b^-2") == w("a a a b^-1 b^-1")
    assert parse_word(A, "") == parse_word(A, "id")


@settings(max_examples=300, deadline=None)
@given(words, words, words)
def test_group_laws(u, v, x):
    assert multiply(multiply(u, v), x) == multiply(u, multiply(v, x))
    assert multiply(u, invert(u)).is_identity()
    assert len(multiply(u, v)) <= len(u) + len(v)


@settings(max_examples=300, deadline=None)
@given(words)
def test_cyclic_reduce_reconstructs(u):
    core, c = cyclic_reduce(u)
    assert conjugate(core, c) == u
    if len(core) > 1:
        assert core.raw[0] != -core.raw[-1]


@settings(max_examples=300, deadline=None)
@given(words, words)
def test_conjugates_are_detected(u, c):
    v = conjugate(u, c)
    d = solve_conjugator(u, v)
    assert d is not None and conjugate(u, d) == v


def test_solve_conjugator_soundness_random():
    rng = random.Random(7)
    for _ in range(1000):
        u, v = random_word(A, rng, 6), random_word(A, rng, 6)
        c = solve_conjugator(u, v)
        if c is not None:
            assert conjugate(u, c) == v
        # a genuine conjugate is always found
        assert are_conjugate(u, conjugate(u, v))


def test_commutator_and_product():
    assert commutator(w("a"), w("b")) == w("a b a^-1 b^-1")
    assert product([], A).is_identity()
    with pytest.raises(WordError):
        product([])
