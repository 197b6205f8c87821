import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjlen.errors import DomainError, MalformedInput
from conjlen.words import (Alphabet, CyclicWord, conjugate_in_free, cyclic_reduce, exponent_vector,
                           exps, free_reduce, invert, max_root_free, multiply, power)

A = Alphabet(["a1", "a2", "a3", "s", "t", "l"])
P = A.parse

raw = st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=14).map(tuple)
reduced = raw.map(free_reduce)


def test_free_reduce_examples():
    assert free_reduce(P("a1") + P("a1^-1")) == ()
    assert free_reduce((4, 5, -5, 4)) == P("s s")
    assert free_reduce((1, 2, -2, 1, -1, 3)) == P("a1 a3")


def test_free_reduce_rejects_unknown_letter():
    with pytest.raises(MalformedInput):
        free_reduce((1, 9), A)


def test_multiply_and_invert():
    assert multiply(P("a1"), P("a1^-1")) == ()
    assert invert(P("a1 a2^-1 s")) == P("s^-1 a2 a1^-1")
    assert multiply(P("a1 a2"), P("a2^-1 a3")) == P("a1 a3")


def test_cyclic_reduce_examples():
    core, shift = cyclic_reduce(P("a1 a2 a1^-1"))
    assert core == CyclicWord(P("a2")) and shift == P("a1")
    core, shift = cyclic_reduce(P("a2 a3"))
    assert core == CyclicWord(P("a2 a3")) and shift == ()
    core, shift = cyclic_reduce(P("s^-1 t s s"))
    assert core == CyclicWord(P("t s")) and shift == P("s^-1")


def test_exponent_vector_examples():
    assert exponent_vector(P("a1 a2 a1"), 6)[:3] == [2, 1, 0]
    assert exponent_vector((), 6) == [0] * 6
    assert exponent_vector(P("a1 a2^-1 a2^-1 s"), 6) == [1, -2, 0, 1, 0, 0]
    assert exps(P("a1 a2 a1")) == 3


def test_max_root_examples():
    assert max_root_free(P("a1 a1 a1")) == (P("a1"), 3)
    assert max_root_free(P("a1 a2")) == (P("a1 a2"), 1)
    assert max_root_free(P("a1 a2 a2 a1^-1")) == (P("a1 a2 a1^-1"), 2)
    with pytest.raises(DomainError):
        max_root_free(())


def test_conjugate_in_free_examples():
    assert conjugate_in_free(P("a1 a2"), P("a2 a1")) == P("a1")
    assert conjugate_in_free(P("a1"), P("a2")) is None
    assert conjugate_in_free(P("t"), P("s t s^-1")) == P("s^-1")


def test_alphabet_round_trip_and_shorthand():
    assert A.format(P("a1 a1 s^-2 A1")) == "a1^2 s^-2 a1^-1"
    assert P("A1 S T L") == P("a1^-1 s^-1 t^-1 l^-1")
    assert P(A.format(P("a1^3 t^-2 a2"))) == P("a1^3 t^-2 a2")
    with pytest.raises(MalformedInput):
        P("a1^x")


@given(raw)
def test_free_reduce_idempotent(w):
    assert free_reduce(free_reduce(w)) == free_reduce(w)


@settings(max_examples=300)
@given(reduced, reduced, reduced)
def test_group_laws(u, v, w):
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
    assert invert(invert(u)) == u
    assert multiply(u, invert(u)) == ()


@given(reduced, reduced)
def test_exponent_vector_is_a_homomorphism(u, v):
    lhs = exponent_vector(multiply(u, v), 3)
    assert lhs == [x + y for x, y in zip(exponent_vector(u, 3), exponent_vector(v, 3))]


@given(reduced.filter(bool), st.integers(1, 4))
def test_max_root_round_trip(u, k):
    w = power(u, k)
    root, mult = max_root_free(w)
    assert power(root, mult) == w
    assert max_root_free(root)[1] == 1
    assert mult % k == 0


@given(reduced, reduced)
def test_conjugate_in_free_sound(u, g):
    v = multiply(invert(g), u, g)
    w = conjugate_in_free(u, v)
    assert w is not None
    assert multiply(u, w) == multiply(w, v)
    assert len(w) <= len(u) + len(v) or not u


def _all_words(n):
    letters = [1, 2, -1, -2]
    out = [()]
    for k in range(1, n + 1):
        out += [free_reduce(w) for w in itertools.product(letters, repeat=k)
                if free_reduce(w) == w]
    return out


def test_conjugate_in_free_complete_against_bfs():
    # two conjugate words of length <= 5 are conjugate by a word of length <= 5
    words = _all_words(5)
    for u in words[:60]:
        reach = {multiply(invert(g), u, g) for g in words}
        for v in words:
            found = conjugate_in_free(u, v) is not None
            assert found == (v in reach)
            if found:
                w = conjugate_in_free(u, v)
                assert multiply(u, w) == multiply(w, v)
