import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conjlen.diophantine import bezout_bounded, bezout_lcm, multi_bezout
from conjlen.errors import DomainError


def test_bezout_examples():
    assert bezout_bounded(4, 6, 2).values == (2, -1)
    assert bezout_bounded(1, 1, 0).values == (0, 0)
    assert bezout_bounded(4, 6, 3) is None
    with pytest.raises(DomainError):
        bezout_bounded(0, 3, 1)


def test_bezout_lcm_examples():
    x, y = bezout_lcm(4, 6, 2).values
    assert abs(4 * x) <= 12 and abs(6 * y) <= 12
    x, y = bezout_lcm(1, 1, 5).values
    assert x + y == 5 and abs(x) <= 1 and abs(y) <= 5
    assert bezout_lcm(-3, 5, 0).values == (0, 0)


def test_multi_bezout_examples():
    sol = multi_bezout((6, 10, 15), 1)
    assert 6 * sol[0] + 10 * sol[1] + 15 * sol[2] == 1
    assert all(abs(x) <= 15 for x in sol)
    assert multi_bezout((7, -4, 9), 0).values == (0, 0, 0)
    assert multi_bezout((2, 4), 3) is None
    assert multi_bezout((0, 0), 0).values == (0, 0)
    assert multi_bezout((0, 0), 1) is None


def test_two_variable_grid_against_brute_force():
    for a in range(-20, 21):
        for b in range(-20, 21):
            if not a or not b:
                continue
            d = gcd(a, b)
            bx = Fraction(abs(b), d)
            for c in range(-40, 41):
                by = max(abs(Fraction(c, b)), Fraction(abs(a), d))
                # a solution in the certified box exists iff d | c
                brute = any((c - a * x) % b == 0 and abs(Fraction(c - a * x, b)) <= by
                            for x in range(-int(bx), int(bx) + 1))
                sol = bezout_bounded(a, b, c)
                assert (sol is not None) == brute
                if sol is not None:
                    x, y = sol.values
                    assert a * x + b * y == c and abs(x) <= bx and abs(y) <= by
                    lcm = abs(a * b) // d
                    assert abs(a * x) <= lcm and abs(b * y) <= max(abs(c), lcm)


def test_multivariate_grid():
    for m in range(1, 5):
        box = range(-9, 10) if m < 4 else range(-4, 5)
        for coeffs in itertools.product(box, repeat=m):
            g = gcd(*coeffs)
            top = max(map(abs, coeffs))
            for c in range(-20, 21, 1 if m < 3 else 3):
                sol = multi_bezout(coeffs, c)
                assert (sol is not None) == (c == 0 if g == 0 else c % g == 0)
                if sol is not None:
                    assert sum(a * x for a, x in zip(coeffs, sol)) == c
                    assert all(abs(x) <= max(top, abs(c)) for x in sol)


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(-10**6, 10**6).filter(bool),
       st.integers(-10**7, 10**7))
def test_bezout_large(a, b, c):
    sol = bezout_bounded(a, b, c)
    assert (sol is None) == (c % gcd(a, b) != 0)
    if sol is not None:
        assert sol.within_bounds()
