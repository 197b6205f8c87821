"""Normal forms in F, E = F(s, t), H = F x| <s>, G = F x| E and the central
extension Lambda, where ``s^-1 a s = phi(a)``, t commutes with F in G, and
``[t, a_i] = l`` with l central in Lambda.

Every element of Lambda is uniquely ``w_F . w_E . l^N`` with w_F a reduced
word in the a-letters and w_E a reduced word in s, t.  The letters of a word
are pushed across one another left to right:

* ``s^k a = phi^-k(a) s^k``
* ``t a = a t l``, and more generally ``t y = y t l^exps(y)`` for y in F.

So appending a_i^mu when the E-part has s-exponent k contributes
``mu * sum_c tprof[c] * ((1..1) Phi^-(k-c))_i`` to N, where ``tprof[c]`` is the
signed number of t-letters sitting at s-level c.  The t-profile is additive
over letters, hence unchanged by free reduction, and only the exponent vector
of the F-part is needed, which is why the abelian trace never materialises
w_F.

E-parts are stored run-length encoded (tuples of ``(letter, exponent)``) so
that conjugators like ``t^f(n)`` stay small.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import matrix as mx
from .automorphism import builtin_automorphism
from .errors import MalformedInput, ResourceError
from .words import Alphabet, free_reduce, invert

GROUPS = ("F", "E", "H", "G", "L")


# run-length encoded words ---------------------------------------------------

def rle(word):
    out = []
    for x in word:
        g, e = abs(x), (1 if x > 0 else -1)
        if out and out[-1][0] == g:
            e += out[-1][1]
            out.pop()
            if e:
                out.append((g, e))
        else:
            out.append((g, e))
    return tuple(out)


def rle_mul(a, b):
    out = list(a)
    for g, e in b:
        while True:
            if out and out[-1][0] == g:
                e += out.pop()[1]
                if e == 0:
                    break
                continue
            out.append((g, e))
            break
    return tuple(out)


def rle_inv(a):
    return tuple((g, -e) for g, e in reversed(a))


def rle_len(a):
    return sum(abs(e) for _, e in a)


def rle_word(a, limit=None):
    if limit is not None and rle_len(a) > limit:
        raise ResourceError(f"word of length {rle_len(a)} exceeds budget {limit}")
    out = []
    for g, e in a:
        out.extend([g if e > 0 else -g] * abs(e))
    return tuple(out)


@dataclass(frozen=True)
class Element:
    """``f . e . l^n`` with f in F, e in E (run-length encoded), n the central exponent.

    ``f`` is ``None`` when the F-part was too long to keep; ``alpha`` (the
    exponent vector of f) is always exact, as are ``e`` and ``n``.
    """

    f: tuple
    alpha: tuple
    e: tuple
    n: int

    @property
    def exact(self):
        return self.f is not None

    def g_key(self):
        return (self.f, self.e)

    def key(self):
        return (self.f, self.e, self.n)


@dataclass(frozen=True)
class PowerWord:
    """A word written as a product of powers ``w1^k1 w2^k2 ...`` (not reduced)."""

    factors: tuple

    def __len__(self):
        return sum(len(w) * abs(k) for w, k in self.factors)

    def letters(self, limit=None):
        if limit is not None and len(self) > limit:
            raise ResourceError(f"power word of length {len(self)} exceeds budget {limit}")
        out = []
        for w, k in self.factors:
            piece = w if k > 0 else invert(w)
            out.extend(piece * abs(k))
        return tuple(out)

    @classmethod
    def of(cls, *factors):
        return cls(tuple((tuple(w), k) for w, k in factors if w and k))


# the group context ------------------------------------------------------------

@lru_cache(maxsize=4096)
def _tprofile(e, t_letter, s_letter):
    prof = {}
    level = 0
    for g, k in e:
        if g == s_letter:
            level += k
        elif g == t_letter:
            prof[level] = prof.get(level, 0) + k
    return tuple((c, v) for c, v in sorted(prof.items()) if v)


class LambdaGroup:
    """Arithmetic in H, G and Lambda over a fixed automorphism phi.

    Letters: ``a_i = i`` for 1 <= i <= m, then ``s = m+1``, ``t = m+2`` and
    the central letter ``l = m+3``.
    """

    def __init__(self, phi=None, word_budget=10**6):
        self.phi = phi if phi is not None else builtin_automorphism(3)
        self.m = m = self.phi.rank
        self.S, self.T, self.L = m + 1, m + 2, m + 3
        self.word_budget = word_budget
        names = [f"a{i}" for i in range(1, m + 1)] + ["s", "t", "l"]
        self.alphabet = Alphabet(names, aliases={"λ": "l"})
        self.zero = (0,) * m
        self.identity = Element((), self.zero, (), 0)
        # per-group memo tables used by the searches (balls, conjugate sets)
        self.cache = {}

    # words ---------------------------------------------------------------

    def parse(self, text, group="L"):
        word = self.alphabet.parse(text)
        self.check_group(word, group)
        return word

    def format(self, word):
        if isinstance(word, PowerWord):
            return self.format_power(word)
        return self.alphabet.format(word)

    def format_power(self, pw, expand_below=2000):
        """Short power words are shown reduced; long ones as ``(w)^k`` factors."""
        if len(pw) <= expand_below:
            return self.alphabet.format(free_reduce(pw.letters()))
        if not pw.factors:
            return "1"
        parts = []
        for w, k in pw.factors:
            if k == 1:
                parts.append(self.alphabet.format(w))
            elif len(w) == 1:
                parts.append(f"{self.alphabet.names[abs(w[0]) - 1]}^{k if w[0] > 0 else -k}")
            else:
                parts.append(f"({self.alphabet.format(w)})^{k}")
        return " ".join(parts)

    def allowed(self, group):
        m = self.m
        return {
            "F": set(range(1, m + 1)),
            "E": {self.S, self.T},
            "H": set(range(1, m + 1)) | {self.S},
            "G": set(range(1, m + 3)),
            "L": set(range(1, m + 4)),
        }[group]

    def check_group(self, word, group):
        if group not in GROUPS:
            raise MalformedInput(f"unknown group {group!r}; expected one of {', '.join(GROUPS)}")
        ok = self.allowed(group)
        for x in word:
            if abs(x) not in ok:
                raise MalformedInput(
                    f"letter {self.alphabet.format((x,))} not in the alphabet of {group}")

    def is_a(self, x):
        return 0 < abs(x) <= self.m

    def sigma(self, word):
        S = self.S
        return sum((1 if x > 0 else -1) for x in word if abs(x) == S)

    def Sigma(self, word):
        S, level, best = self.S, 0, 0
        for x in word:
            if abs(x) == S:
                level += 1 if x > 0 else -1
                best = max(best, abs(level))
        return best

    def retract(self, word, target):
        """Kill generators: ``H`` drops t and l, ``E`` drops a-letters and l, ``Z`` gives sigma."""
        if target == "Z":
            return self.sigma(word)
        if target == "H":
            return free_reduce(x for x in word if abs(x) not in (self.T, self.L))
        if target == "E":
            return free_reduce(x for x in word if abs(x) in (self.S, self.T))
        raise MalformedInput(f"unknown retraction target {target!r}")

    def strip_lambda(self, word):
        """(word without l-letters, exponent sum of l)."""
        L = self.L
        rest = free_reduce(x for x in word if abs(x) != L)
        return rest, sum((1 if x > 0 else -1) for x in word if abs(x) == L)

    # E-part statistics ------------------------------------------------------

    def e_sigma(self, e):
        return sum(k for g, k in e if g == self.S)

    def tprofile(self, e):
        return _tprofile(e, self.T, self.S)

    def _twist_sum(self, prof, level, alpha):
        """sum_c prof[c] * (1..1) Phi^-(level-c) . alpha."""
        total = 0
        for c, cnt in prof:
            row = self.phi.ones_row(c - level)
            total += cnt * sum(r * a for r, a in zip(row, alpha))
        return total

    # normal forms -------------------------------------------------------------

    def normalize(self, word, abelian=False):
        """The normal form of ``word`` as an Element.

        With ``abelian`` the F-part is never built (``f`` is None).  Without
        it a ResourceError is raised once the F-part exceeds the budget.
        """
        phi, m, S, T, L = self.phi, self.m, self.S, self.T, self.L
        wf = []
        alpha = [0] * m
        estack = []
        prof = {}
        level = 0
        n = 0
        budget = self.word_budget
        for x in word:
            g = abs(x)
            eps = 1 if x > 0 else -1
            if g <= m:
                col = phi.power(-level)
                for j in range(m):
                    alpha[j] += eps * col[j][g - 1]
                for c, cnt in prof.items():
                    if cnt:
                        n += eps * cnt * phi.ones_row(c - level)[g - 1]
                if not abelian:
                    for y in phi.letter_image(x, -level):
                        if wf and wf[-1] == -y:
                            wf.pop()
                        else:
                            wf.append(y)
                    if len(wf) > budget:
                        raise ResourceError(
                            f"F-part exceeds word budget {budget}; use the abelian normal form")
            elif g == L:
                n += eps
            elif g == S or g == T:
                if g == S:
                    level += eps
                else:
                    prof[level] = prof.get(level, 0) + eps
                if estack and estack[-1][0] == g:
                    k = estack.pop()[1] + eps
                    if k:
                        estack.append((g, k))
                else:
                    estack.append((g, eps))
            else:
                raise MalformedInput(f"letter {x} outside the alphabet")
        return Element(None if abelian else tuple(wf), tuple(alpha), tuple(estack), n)

    def normalize_abelian(self, word):
        return self.normalize(word, abelian=True)

    def element(self, word):
        """Full normal form when within budget, abelian trace otherwise."""
        if isinstance(word, PowerWord):
            return self.power_word_element(word)
        try:
            return self.normalize(word)
        except ResourceError:
            return self.normalize(word, abelian=True)

    def from_f(self, f):
        f = tuple(f)
        alpha = [0] * self.m
        for x in f:
            alpha[abs(x) - 1] += 1 if x > 0 else -1
        return Element(f, tuple(alpha), (), 0)

    def from_e(self, e):
        return Element((), self.zero, tuple(e), 0)

    def central(self, n):
        return Element((), self.zero, (), n)

    def from_alpha(self, alpha):
        return Element(None, tuple(alpha), (), 0)

    # group operations -------------------------------------------------------

    def _twist_f(self, f, k):
        if f is None:
            return None
        if k == 0:
            return f
        try:
            return self.phi.apply(f, -k)
        except ResourceError:
            return None

    def mul(self, x, y):
        k = self.e_sigma(x.e)
        f2 = self._twist_f(y.f, k)
        f = None
        if x.f is not None and f2 is not None and len(x.f) + len(f2) <= self.word_budget:
            out = list(x.f)
            for z in f2:
                if out and out[-1] == -z:
                    out.pop()
                else:
                    out.append(z)
            f = tuple(out)
        alpha2 = y.alpha if k == 0 else mx.matvec(self.phi.power(-k), y.alpha)
        alpha = tuple(a + b for a, b in zip(x.alpha, alpha2))
        n = x.n + y.n + self._twist_sum(self.tprofile(x.e), k, y.alpha)
        return Element(f, alpha, rle_mul(x.e, y.e), n)

    def product(self, *items):
        out = self.identity
        for it in items:
            out = self.mul(out, it if isinstance(it, Element) else self.element(it))
        return out

    def inv(self, x):
        einv = self.from_e(rle_inv(x.e))
        finv = Element(None if x.f is None else invert(x.f),
                       tuple(-a for a in x.alpha), (), 0)
        return self.mul(self.mul(einv, finv), self.central(-x.n))

    def pow(self, x, k):
        if k < 0:
            x, k = self.inv(x), -k
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def power_word_element(self, pw):
        out = self.identity
        for w, k in pw.factors:
            out = self.mul(out, self.pow(self.element(w), k))
        return out

    def to_word(self, x, with_lambda=True, limit=None):
        """A word spelling the element: F-part, E-part, then l^n."""
        if x.f is None:
            raise ResourceError("F-part not available for this element")
        limit = self.word_budget if limit is None else limit
        tail = ()
        if with_lambda and x.n:
            if abs(x.n) > limit:
                raise ResourceError(f"central exponent {x.n} exceeds budget {limit}")
            tail = (self.L if x.n > 0 else -self.L,) * abs(x.n)
        return x.f + rle_word(x.e, limit) + tail

    def format_element(self, x, group="L"):
        A = self.alphabet
        fpart = A.format(x.f) if x.f is not None else f"<abelian {list(x.alpha)}>"
        epart = A.format(rle_word(x.e)) if rle_len(x.e) <= 10000 else self._format_rle(x.e)
        if group == "H":
            return f"F: {fpart} | s^{self.e_sigma(x.e)}"
        if group == "G":
            return f"F: {fpart} | E: {epart}"
        return f"F: {fpart} | E: {epart} | N: {x.n}"

    def _format_rle(self, e):
        names = self.alphabet.names
        return " ".join(names[g - 1] if k == 1 else f"{names[g - 1]}^{k}" for g, k in e)

    # equality -----------------------------------------------------------------

    def same(self, x, y, group="L"):
        """(equal?, exact?) for two elements; inexact when an F-part is missing."""
        if x.e != y.e or x.alpha != y.alpha:
            return False, True
        if group == "L" and x.n != y.n:
            return False, True
        if x.f is None or y.f is None:
            return True, False
        return x.f == y.f, True

    def equal(self, u, v, group="L"):
        """Whether the words u and v are the same element of ``group``."""
        self.check_group(u, group)
        self.check_group(v, group)
        if group in ("F", "E"):
            return free_reduce(u) == free_reduce(v)
        x, y = self.normalize(u), self.normalize(v)
        return self.same(x, y, group)[0]

    def lambda_defect(self, u, w, v):
        """The N with ``u w = w v l^N`` in Lambda, or None if u w != w v in G.

        l-letters in the inputs are allowed and simply shift N.
        """
        x = self.product(u, w)
        y = self.product(w, v)
        eq, _ = self.same(x, y, "G")
        if not eq:
            return None
        return x.n - y.n

    def conjugates_in(self, u, w, v, group="L"):
        """Whether u w = w v holds in ``group`` (words, Elements or PowerWords)."""
        x = self.product(u, w)
        y = self.product(w, v)
        return self.same(x, y, group)
