import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjlen import matrix as mx
from conjlen.automorphism import (apply_aut, builtin_automorphism, identity_automorphism,
                                  make_aut, parse_aut, stretch_sequence)
from conjlen.errors import MalformedInput, NotAnAutomorphism
from conjlen.words import exponent_vector, exps, free_reduce, multiply

PHI = builtin_automorphism(3)
words = st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=8).map(free_reduce)


def test_builtin_images_and_inverse():
    assert PHI.images == ((2,), (3,), (1, 2, 3))
    assert PHI.inverse_images == ((3, -2, -1), (1,), (2,))
    assert PHI.growth == 3
    assert mx.matmul(PHI.matrix, PHI.inverse_matrix) == mx.identity(3)


def test_identity_and_swap():
    ident = identity_automorphism(3)
    assert ident.matrix == mx.identity(3)
    swap = make_aut([(2,), (1,)], [(2,), (1,)])
    assert mx.det(swap.matrix) == -1


def test_rejects_non_automorphisms():
    with pytest.raises(NotAnAutomorphism):
        make_aut([(1, 1), (2,)], [(1,), (2,)])
    with pytest.raises(NotAnAutomorphism):
        make_aut([(2,), (1,)], [(1,), (2,)])
    with pytest.raises(MalformedInput):
        make_aut([(4,)], [(1,)])


def test_apply_examples():
    assert apply_aut(PHI, (1,), 3) == (1, 2, 3)
    assert apply_aut(PHI, (1, 2), 0) == (1, 2)
    assert apply_aut(PHI, (2,), -1) == (1,)


def test_stretch_values():
    assert [stretch_sequence(PHI, 1, n) for n in range(7)] == [1, 1, 1, 3, 5, 9, 17]
    assert exps(apply_aut(PHI, (1,), 12)) == stretch_sequence(PHI, 1, 12)
    assert all(stretch_sequence(identity_automorphism(3), 1, n) == 1 for n in range(10))


def test_homological_stretch():
    assert PHI.has_homological_stretch()
    assert not identity_automorphism(3).has_homological_stretch()
    assert not make_aut([(2,), (1,)], [(2,), (1,)]).has_homological_stretch()


def test_file_format_round_trip():
    phi = parse_aut(PHI.dump())
    assert phi == PHI
    with pytest.raises(MalformedInput):
        parse_aut("a2\na1\n")


@given(words, words, st.integers(-3, 3))
def test_apply_is_a_homomorphism(u, v, k):
    assert apply_aut(PHI, multiply(u, v), k) == multiply(apply_aut(PHI, u, k), apply_aut(PHI, v, k))


@given(words, st.integers(-3, 3), st.integers(-3, 3))
def test_apply_composes(u, j, k):
    assert apply_aut(PHI, apply_aut(PHI, u, j), k) == apply_aut(PHI, u, j + k)


@settings(max_examples=50)
@given(words, st.integers(-6, 6))
def test_abelianisation_commutes(u, k):
    assert tuple(exponent_vector(apply_aut(PHI, u, k), 3)) == PHI.abelian(tuple(exponent_vector(u, 3)), k)


def test_cayley_hamilton_recurrence():
    # characteristic polynomial x^3 - x^2 - x - 1 gives f(n + 3) = f(n + 2) + f(n + 1) + f(n)
    coeffs = mx.charpoly(PHI.matrix)  # lowest degree first
    assert coeffs == [-1, -1, -1, 1]
    f = [stretch_sequence(PHI, 1, n) for n in range(44)]
    for n in range(41):
        assert sum(c * f[n + i] for i, c in enumerate(coeffs)) == 0


def test_growth_ratio_window():
    for n in range(8, 41):
        ratio = stretch_sequence(PHI, 1, n + 1) / stretch_sequence(PHI, 1, n)
        assert 1.7 <= ratio <= 1.95
