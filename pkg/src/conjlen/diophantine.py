"""Linear Diophantine solvers with explicit size guarantees.

* ``bezout_bounded(a, b, c)``: a solution of ``ax + by = c`` with
  ``|x| <= |b/d|`` and ``|y| <= max(|c/b|, |a/d|)``, d = gcd(a, b).
* ``bezout_lcm``: the same solution, certified in the form
  ``|ax| <= lcm(a, b)`` and ``|by| <= max(|c|, lcm(a, b))``.
* ``multi_bezout(a, c)``: ``sum a_i x_i = c`` with every
  ``|x_i| <= max(|a_1|, ..., |a_m|, |c|)``.

Bounds are rationals and are compared exactly.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError
from .matrix import ext_gcd


class BoundedSolution:
    """Solution values with the per-coordinate bounds they are certified against."""

    __slots__ = ("values", "bounds")

    def __init__(self, values, bounds):
        self.values = values
        self.bounds = bounds

    def __repr__(self):
        return f"BoundedSolution(values={self.values}, bounds={self.bounds})"

    def __eq__(self, other):
        return isinstance(other, BoundedSolution) and (self.values, self.bounds) == (other.values, other.bounds)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def within_bounds(self):
        return all(abs(v) <= b for v, b in zip(self.values, self.bounds))


@lru_cache(maxsize=1 << 16)
def _pair(a, b, c):
    """Integer core of ``bezout_bounded``: the chosen (x, y) or None."""
    d = gcd(a, b)
    if c % d:
        return None
    _, u, _ = ext_gcd(a, b)
    period = b // d  # signed: all solutions are x0 + k*period
    first = (u * (c // d)) % period  # x/period lies in [0, 1)
    second = first - period  # x/period lies in [-1, 0)
    candidates = [(x, (c - a * x) // b) for x in (first, second)]
    if c == 0:
        # no sign to compare: both candidates qualify, keep the smaller one
        return min(candidates, key=lambda p: (abs(p[0]), abs(p[1]), p[0] < 0))
    # sign of a/d against sign of c/b
    same = (a > 0) == ((c > 0) == (b > 0))
    return candidates[0] if same else candidates[1]


def bezout_bounded(a, b, c):
    """The solution the two-candidate argument produces, or None if gcd(a, b) does not divide c.

    Of the solutions with x/(b/d) in [0, 1) and in [-1, 0), the first is
    taken when a/d and c/b have the same sign and the second otherwise.

    >>> bezout_bounded(4, 6, 2).values
    (2, -1)
    """
    if a == 0 or b == 0:
        raise DomainError("bezout_bounded needs non-zero a and b")
    choice = _pair(a, b, c)
    if choice is None:
        return None
    d = gcd(a, b)
    bounds = (Fraction(abs(b), d), max(abs(Fraction(c, b)), abs(Fraction(a, d))))
    sol = BoundedSolution(choice, bounds)
    assert a * choice[0] + b * choice[1] == c and sol.within_bounds()
    return sol


def bezout_lcm(a, b, c):
    """Same solution as ``bezout_bounded``; bounds are reported on |x| and |y|
    after dividing the lcm-form bounds on |ax| and |by| by |a| and |b|.
    """
    sol = bezout_bounded(a, b, c)
    if sol is None:
        return None
    lcm = abs(a * b) // gcd(a, b)
    bounds = (Fraction(lcm, abs(a)), Fraction(max(abs(c), lcm), abs(b)))
    out = BoundedSolution(sol.values, bounds)
    assert out.within_bounds()
    return out


def multi_bezout(coeffs, c):
    """Solve ``sum coeffs[i] * x[i] = c`` by peeling off the first non-zero coefficient.

    >>> multi_bezout((2, 4), 3) is None
    True
    """
    if type(coeffs) is not tuple:
        coeffs = tuple(coeffs)
    values = _multi(coeffs, c)
    if values is None:
        return None
    top = _plan(coeffs)[4]
    bound = top if top >= abs(c) else abs(c)
    return BoundedSolution(values, (bound,) * len(coeffs))


@lru_cache(maxsize=1 << 18)
def _plan(coeffs):
    """Everything about the recursion that does not depend on c."""
    nz = tuple(i for i, a in enumerate(coeffs) if a)
    g = gcd(*coeffs)
    top = max(map(abs, coeffs), default=0)
    if len(nz) <= 2:
        return nz, g, None, None, top
    rest = nz[1:]
    e = gcd(*(coeffs[i] for i in rest))
    return nz, g, e, tuple(coeffs[i] // e for i in rest), top


def _multi(coeffs, c):
    nz, g, e, reduced, _ = _plan(coeffs)
    if not nz:
        return (0,) * len(coeffs) if c == 0 else None
    if c == 0:
        return (0,) * len(coeffs)
    if c % g:
        return None
    out = [0] * len(coeffs)
    if len(nz) == 1:
        i = nz[0]
        out[i] = c // coeffs[i]
    elif len(nz) == 2:
        i, j = nz
        out[i], out[j] = _pair(coeffs[i], coeffs[j], c)
    else:
        # a_1 x_1 + e y = c with e = gcd(rest), then (rest / e) . x = y
        out[nz[0]], y = _pair(coeffs[nz[0]], e, c)
        for i, v in zip(nz[1:], _multi(reduced, y)):
            out[i] = v
    return tuple(out)
