"""Automorphisms of a free group F(a1..am) and their abelianisation.

The images and the inverse images are both supplied and checked against
each other; inverting a free-group automorphism in general would need
Nielsen machinery we do not carry.
"""

from math import gcd
from pathlib import Path

from . import matrix as mx
from .errors import MalformedInput, NotAnAutomorphism, ResourceError
from .words import Alphabet, exponent_vector, free_reduce, invert

DEFAULT_WORD_BUDGET = 10**6


def free_alphabet(m):
    return Alphabet([f"a{i}" for i in range(1, m + 1)])


def _substitute(word, images, budget):
    out = []
    for x in word:
        piece = images[x - 1] if x > 0 else invert(images[-x - 1])
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
        if len(out) > budget:
            raise ResourceError(f"automorphism image exceeds word budget {budget}")
    return tuple(out)


def _totient(n):
    result, p, k = n, 2, n
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


class FreeAut:
    """A validated automorphism of the free group of rank ``m``.

    ``matrix`` has the exponent vector of the i-th image as column i, so
    ``exponent_vector(apply(u, k)) == matrix**k . exponent_vector(u)``.
    """

    def __init__(self, images, inverse_images, word_budget=DEFAULT_WORD_BUDGET):
        images = tuple(free_reduce(w) for w in images)
        inverse_images = tuple(free_reduce(w) for w in inverse_images)
        m = len(images)
        if m < 1:
            raise MalformedInput("an automorphism needs rank at least 1")
        if len(inverse_images) != m:
            raise MalformedInput(f"{m} images but {len(inverse_images)} inverse images")
        for w in images + inverse_images:
            for x in w:
                if abs(x) > m:
                    raise MalformedInput(f"image letter {x} outside a1..a{m}")
        self.rank = m
        self.images = images
        self.inverse_images = inverse_images
        self.word_budget = word_budget
        self.matrix = tuple(zip(*(exponent_vector(w, m) for w in images)))
        self.inverse_matrix = tuple(zip(*(exponent_vector(w, m) for w in inverse_images)))
        if abs(mx.det(self.matrix)) != 1:
            raise NotAnAutomorphism(f"abelianisation has determinant {mx.det(self.matrix)}")
        for i in range(1, m + 1):
            there = _substitute(images[i - 1], inverse_images, word_budget)
            back = _substitute(inverse_images[i - 1], images, word_budget)
            if there != (i,) or back != (i,):
                raise NotAnAutomorphism(f"inverse images do not invert the image of a{i}")
        self.growth = max(1, max(len(w) for w in images + inverse_images))
        self._image_cache = {}
        self._power_cache = {0: mx.identity(m)}
        self._row_cache = {}

    def __repr__(self):
        A = free_alphabet(self.rank)
        return "FreeAut(" + ", ".join(A.format(w) for w in self.images) + ")"

    def __eq__(self, other):
        return isinstance(other, FreeAut) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def generator_image(self, i, k):
        """phi^k(a_i), cached, for generator index i >= 1."""
        key = (i, k)
        hit = self._image_cache.get(key)
        if hit is not None:
            return hit
        if k == 0:
            out = (i,)
        else:
            step = 1 if k > 0 else -1
            prev = self.generator_image(i, k - step)
            if step > 0:
                out = _substitute(prev, self.images, self.word_budget)
            else:
                out = _substitute(prev, self.inverse_images, self.word_budget)
        self._image_cache[key] = out
        return out

    def letter_image(self, x, k):
        w = self.generator_image(abs(x), k)
        return w if x > 0 else invert(w)

    def apply(self, u, k=1):
        """phi^k(u) as a reduced word."""
        out = []
        for x in u:
            if x == 0 or abs(x) > self.rank:
                raise MalformedInput(f"letter {x} outside a1..a{self.rank}")
            for y in self.letter_image(x, k):
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
            if len(out) > self.word_budget:
                raise ResourceError(f"phi^{k}(u) exceeds word budget {self.word_budget}")
        return tuple(out)

    def power(self, k):
        """The matrix Phi^k (negative k uses the inverse matrix)."""
        hit = self._power_cache.get(k)
        if hit is None:
            base = self.matrix if k > 0 else self.inverse_matrix
            hit = mx.matpow(base, abs(k))
            if abs(k) <= 4096:
                self._power_cache[k] = hit
        return hit

    def ones_row(self, k):
        """The row vector (1 ... 1) . Phi^k: exponent sums of phi^k(a_i)."""
        hit = self._row_cache.get(k)
        if hit is None:
            if k == 0:
                hit = (1,) * self.rank
            elif abs(k) <= 4096 and (k - (1 if k > 0 else -1)) in self._row_cache:
                step = 1 if k > 0 else -1
                prev = self._row_cache[k - step]
                hit = mx.vecmat(prev, self.matrix if k > 0 else self.inverse_matrix)
            else:
                hit = mx.vecmat((1,) * self.rank, self.power(k))
            if abs(k) <= 4096:
                self._row_cache[k] = hit
        return hit

    def abelian(self, vec, k):
        """Phi^k . vec."""
        return mx.matvec(self.power(k), vec)

    def stretch(self, i, n):
        """Exponent sum of phi^n(a_i), computed from the matrix."""
        return self.ones_row(n)[i - 1]

    def has_homological_stretch(self):
        """Whether Phi has an eigenvalue off the unit circle.

        Phi has determinant +-1, so otherwise every eigenvalue is a root of
        unity (Kronecker) of degree at most m.  With L the lcm of all orders
        N having totient(N) <= m, that happens exactly when (Phi^L - I)^m = 0.
        """
        m = self.rank
        period = 1
        for n in range(1, 2 * m * m + 3):
            if _totient(n) <= m:
                period = period * n // gcd(period, n)
        nil = mx.sub(mx.matpow(self.matrix, period), mx.identity(m))
        return mx.max_abs(mx.matpow(nil, m)) != 0

    def dump(self):
        A = free_alphabet(self.rank)
        lines = [A.format(w) for w in self.images] + ["---"]
        lines += [A.format(w) for w in self.inverse_images]
        return "\n".join(lines) + "\n"


def make_aut(images, inverse_images, word_budget=DEFAULT_WORD_BUDGET):
    return FreeAut(images, inverse_images, word_budget)


def builtin_automorphism(m=3):
    """a_i -> a_{i+1} for i < m and a_m -> a_1 a_2 ... a_m, with its inverse."""
    if m < 2:
        raise MalformedInput("the built-in automorphism needs m >= 2")
    images = [(i + 1,) for i in range(1, m)] + [tuple(range(1, m + 1))]
    first = (m,) + tuple(-i for i in range(m - 1, 0, -1))
    inverse_images = [first] + [(i,) for i in range(1, m)]
    return FreeAut(images, inverse_images)


def identity_automorphism(m):
    gens = [(i,) for i in range(1, m + 1)]
    return FreeAut(gens, gens)


def parse_aut(text, word_budget=DEFAULT_WORD_BUDGET):
    """Read the file format: one image per line, ``---``, one inverse image per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if lines.count("---") != 1:
        raise MalformedInput("automorphism file needs exactly one '---' separator line")
    cut = lines.index("---")
    fwd, back = lines[:cut], lines[cut + 1:]
    A = free_alphabet(len(fwd))
    return FreeAut([A.parse(x) for x in fwd], [A.parse(x) for x in back], word_budget)


def load_aut(path, word_budget=DEFAULT_WORD_BUDGET):
    return parse_aut(Path(path).read_text(), word_budget)


def apply_aut(phi, u, k=1):
    return phi.apply(u, k)


def stretch_sequence(phi, i, n):
    return phi.stretch(i, n)
