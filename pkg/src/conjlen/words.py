"""Free-group word algebra.

A letter is a non-zero int: ``+i`` is the i-th generator of an alphabet
(1-based) and ``-i`` its inverse.  A word is a tuple of letters.  Every
function here returns freely reduced tuples, so words compare with ``==``.

>>> A = Alphabet(["a1", "a2", "a3", "s", "t"])
>>> A.format(free_reduce(A.parse("a1 a2 a2^-1 a1 a1^-1 a3")))
'a1 a3'
"""

import re
from functools import total_ordering

from .errors import DomainError, MalformedInput

Word = tuple

_TOKEN = re.compile(r"^([^\W\d_][\w']*)(?:\^\(?([+-]?\d+)\)?)?$")


def letter_key(x):
    """Sort key: generator order first, then positive before negative."""
    return (abs(x), x < 0)


def free_reduce(letters, alphabet=None):
    """Stack-based free reduction; validates letters against ``alphabet``."""
    if alphabet is not None:
        n = len(alphabet)
        for x in letters:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise MalformedInput(f"letter {x!r} outside alphabet of size {n}")
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def multiply(*words):
    out = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def invert(u):
    return tuple(-x for x in reversed(u))


def power(u, k):
    """u**k in the free group (k may be negative)."""
    if k < 0:
        u, k = invert(u), -k
    if k == 0 or not u:
        return ()
    core, shift = _peel(u)
    return multiply(shift, core * k, invert(shift))


def exponent_vector(u, size):
    vec = [0] * size
    for x in u:
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return vec


def exps(u):
    """Total exponent sum."""
    return sum(1 if x > 0 else -1 for x in u)


def _peel(u):
    # u = shift . core . shift^-1 with core cyclically reduced
    i, j = 0, len(u) - 1
    while i < j and u[i] == -u[j]:
        i += 1
        j -= 1
    return tuple(u[i:j + 1]), tuple(u[:i])


def least_rotation(seq):
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    keys = [letter_key(x) for x in seq]
    n = len(keys)
    if n == 0:
        return 0
    s = keys + keys
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def _prefix_function(seq):
    pi = [0] * len(seq)
    k = 0
    for i in range(1, len(seq)):
        while k and seq[i] != seq[k]:
            k = pi[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pi[i] = k
    return pi


def _find(pattern, text):
    """First index of ``pattern`` in ``text`` (KMP), or -1."""
    if not pattern:
        return 0
    pi = _prefix_function(pattern)
    k = 0
    for i, x in enumerate(text):
        while k and x != pattern[k]:
            k = pi[k - 1]
        if x == pattern[k]:
            k += 1
            if k == len(pattern):
                return i - k + 1
    return -1


def primitive_period(seq):
    """Smallest p dividing len(seq) with seq == seq[:p] * (len(seq)//p)."""
    n = len(seq)
    if n == 0:
        return 0
    p = n - _prefix_function(seq)[-1]
    return p if n % p == 0 else n


@total_ordering
class CyclicWord:
    """A cyclically reduced word up to rotation.

    ``letters`` keeps the representative rotation it was built from;
    equality, hashing and ordering use the canonical (least) rotation.
    """

    __slots__ = ("letters", "canonical")

    def __init__(self, letters):
        letters = tuple(letters)
        if len(letters) > 1 and letters[0] == -letters[-1]:
            raise DomainError("word is not cyclically reduced")
        self.letters = letters
        k = least_rotation(letters)
        self.canonical = letters[k:] + letters[:k]

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.canonical == other.canonical

    def __lt__(self, other):
        return [letter_key(x) for x in self.canonical] < [letter_key(x) for x in other.canonical]

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"CyclicWord({self.letters!r})"


def cyclic_reduce(u):
    """Split u as shift . core . shift^-1 with core cyclically reduced.

    >>> core, shift = cyclic_reduce((-4, 5, 4, 4))
    >>> core.letters, shift
    ((5, 4), (-4,))
    """
    core, shift = _peel(free_reduce(u))
    return CyclicWord(core), shift


def max_root_free(u):
    """Return (root, k) with u == root**k and k maximal."""
    u = free_reduce(u)
    if not u:
        raise DomainError("the identity has no maximal root")
    core, shift = _peel(u)
    p = primitive_period(core)
    root = multiply(shift, core[:p], invert(shift))
    return root, len(core) // p


def is_power_of(x, root):
    """Whether x lies in <root>, for ``root`` not a proper power."""
    if not x:
        return True
    r, _ = max_root_free(x)
    return r == root or r == invert(root)


def conjugate_in_free(u, v):
    """A word w with u.w == w.v freely, or None.

    Ties between rotations of a periodic core go to the smallest offset.

    >>> conjugate_in_free((1, 2), (2, 1))
    (1,)
    """
    u, v = free_reduce(u), free_reduce(v)
    if len(u) % 2 != len(v) % 2:
        return None
    cu, su = _peel(u)
    cv, sv = _peel(v)
    if len(cu) != len(cv):
        return None
    r = _find(cv, cu + cu)
    if r < 0 or (cu and r >= len(cu)):
        return None
    return multiply(su, cu[:r], invert(sv))


class Alphabet:
    """Ordered generator names; the order fixes exponent-vector coordinates.

    Tokens are ``name`` or ``name^k``; a capitalised name is the inverse
    (``A1`` is ``a1^-1``).  ``1`` denotes the empty word.
    """

    def __init__(self, names, aliases=None):
        names = tuple(names)
        if not names or any(not n for n in names):
            raise MalformedInput("generator names must be non-empty")
        if len(set(names)) != len(names):
            raise MalformedInput(f"duplicate generator names in {names}")
        for n in names:
            if not _TOKEN.match(n) or "^" in n:
                raise MalformedInput(f"bad generator name {n!r}")
        self.names = names
        self._index = {n: i + 1 for i, n in enumerate(names)}
        for n, i in list(self._index.items()):
            inv = n[0].upper() + n[1:]
            if inv != n and inv not in self._index:
                self._index.setdefault("~" + inv, -i)
        for alias, target in (aliases or {}).items():
            self._index[alias] = self._index[target]

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def letter(self, name):
        if name in self._index:
            return self._index[name]
        if "~" + name in self._index:
            return self._index["~" + name]
        raise MalformedInput(f"unknown generator {name!r}; expected one of {' '.join(self.names)}")

    def parse(self, text):
        if isinstance(text, (tuple, list)):
            return free_reduce(text, self)
        letters = []
        for tok in text.replace(",", " ").split():
            if tok in ("1", "e"):
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise MalformedInput(f"bad token {tok!r}")
            x = self.letter(m.group(1))
            k = int(m.group(2)) if m.group(2) is not None else 1
            if k < 0:
                x, k = -x, -k
            letters.extend([x] * k)
        return free_reduce(letters)

    def format(self, word):
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            k = (j - i) * (1 if word[i] > 0 else -1)
            name = self.names[abs(word[i]) - 1]
            parts.append(name if k == 1 else f"{name}^{k}")
            i = j
        return " ".join(parts)
