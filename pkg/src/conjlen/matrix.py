"""Exact integer matrices as tuples of row tuples.

Entries are Python ints, so powers never overflow.  The matrices here are
tiny (m x m with m the rank of the free group), which is why plain nested
tuples beat pulling in an array library.
"""

from fractions import Fraction
from math import gcd


def identity(m):
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def zeros(m):
    return tuple((0,) * m for _ in range(m))


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vecmat(v, a):
    return tuple(sum(x * y for x, y in zip(v, col)) for col in zip(*a))


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def matpow(a, k):
    """a**k for k >= 0 by repeated squaring."""
    if k < 0:
        raise ValueError("negative exponent; use the inverse matrix")
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def max_abs(a):
    return max((abs(x) for r in a for x in r), default=0)


def det(a):
    """Determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a):
    """Coefficients c_0..c_m of det(xI - a), lowest degree first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = zeros(n)
    for k in range(1, n + 1):
        mk = add(matmul(a, mk), scale(coeffs[n - k + 1], identity(n)))
        trace = sum(matmul(a, mk)[i][i] for i in range(n))
        c = Fraction(-trace, k)
        assert c.denominator == 1
        coeffs[n - k] = int(c)
    return coeffs


def ext_gcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_integer(a, b):
    """One integer solution x of a.x = b, or None when there is none.

    Column operations reduce ``a`` to lower echelon form while a unimodular
    matrix tracks them; the triangular system is then solved exactly.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = [list(r) for r in a]
    u = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def colop(j, k, p, q, r, s):
        # (col j, col k) <- (p*col j + q*col k, r*col j + s*col k)
        for mat in (h, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = p * x + q * y, r * x + s * y

    pivots = []
    c = 0
    for i in range(rows):
        if c >= cols:
            break
        for k in range(c + 1, cols):
            if h[i][k]:
                g, x, y = ext_gcd(h[i][c], h[i][k])
                p, q = h[i][c] // g, h[i][k] // g
                colop(c, k, x, y, -q, p)
        if h[i][c]:
            pivots.append((i, c))
            c += 1
    y = [0] * cols
    for i in range(rows):
        acc = b[i] - sum(h[i][j] * y[j] for j in range(cols))
        piv = next((pc for pr, pc in pivots if pr == i), None)
        if piv is None:
            if acc:
                return None
            continue
        if acc % h[i][piv]:
            return None
        y[piv] = acc // h[i][piv]
    x = tuple(sum(u[r][j] * y[j] for j in range(cols)) for r in range(cols))
    return x


def content(v):
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
