"""Centralizers in G = F x| E and the sets of conjugators between two elements.

G embeds in H x E through g -> (g_H, g_E), with image the pairs of equal
s-exponent.  So Z_G(u) is read off from Z_H(u_H) and Z_E(u_E), both cyclic
(generated by maximal roots) except where u_H or u_E is trivial:

===== ========================= ===========================
case  hypothesis                centralizer
===== ========================= ===========================
A     u = 1                     G
B     u_H = 1                   F x <root(u_E)>
C     u_E = 1                   <root(u_F)> x E0
D     sigma(u) = 0              <root(u_F)> x <root(u_E)>
E     sigma(u) != 0             <z>, z = f root(u_E)^q
===== ========================= ===========================

E0 is the kernel of sigma on E.  In case E, ``p sigma(root_H) =
q sigma(root_E) = lcm`` and f is the F-part of root_H^p.

The conjugators from u to v are the centralizer translated by one
particular conjugator, assembled from an E-conjugator x0 and an
H-conjugator w0 whose s-exponents have to be reconciled.
"""

from dataclasses import dataclass, field
from math import gcd

from .automorphism import builtin_automorphism
from .config import NO_DEADLINE, Config
from .diophantine import bezout_lcm
from .errors import DomainError, Undecided
from .hyperbolic import conjugate_in_E, conjugate_in_H, max_root_H
from .normal_form import Element, PowerWord
from .words import free_reduce, is_power_of, max_root_free


@dataclass(frozen=True)
class Parts:
    """A G-element split into the pieces the case analysis looks at."""

    element: Element
    f: tuple        # F-part (normal form)
    e: tuple        # E-part as a reduced word over s, t
    h: tuple        # H-retract, f s^sigma
    sigma: int

    @property
    def case(self):
        if not self.f and not self.e:
            return "A"
        if not self.h:
            return "B"
        if not self.e:
            return "C"
        if self.sigma == 0:
            return "D"
        return "E"


def decompose(G, word):
    """Parts of a G-word (l-letters are dropped)."""
    word, _ = G.strip_lambda(word)
    x = G.normalize(word)
    e = G.retract(word, "E")
    sigma = G.sigma(word)
    h = free_reduce(x.f + ((G.S,) * sigma if sigma >= 0 else (-G.S,) * -sigma))
    return Parts(x, x.f, e, h, sigma)


def _s_power(G, k):
    return (G.S,) * k if k >= 0 else (-G.S,) * -k


def _check_atoroidal(G, cfg):
    if not cfg.assume_atoroidal and G.phi != builtin_automorphism(G.m):
        raise DomainError(
            "centralizer case analysis assumes phi atoroidal; pass assume_atoroidal "
            "(--assume-atoroidal) to accept this for a custom automorphism")


# centralizers -----------------------------------------------------------------------

@dataclass(frozen=True)
class CentralizerDesc:
    tag = "?"

    def generators(self, G):
        """(label, word) pairs generating the centralizer (families of generators
        such as "all a_i" are listed explicitly)."""
        raise NotImplementedError

    def contains(self, G, g):
        """Whether the G-element g lies in the described subgroup."""
        raise NotImplementedError

    def describe(self, G):
        return f"case {self.tag}: " + ", ".join(
            f"{label}={G.format(w)}" for label, w in self.generators(G))


def _free_gens(G):
    return [(f"a{i}", (i,)) for i in range(1, G.m + 1)]


def _kernel_gens(G):
    # s^-i t s^i for i in 0..m-1 generate E0 as a normal subgroup of E; listing
    # them with s-conjugation is enough to describe E0 to a reader
    return [("t", (G.T,)), ("s^-1 t s", (-G.S, G.T, G.S))]


@dataclass(frozen=True)
class CaseA(CentralizerDesc):
    tag = "A"

    def generators(self, G):
        return _free_gens(G) + [("s", (G.S,)), ("t", (G.T,))]

    def contains(self, G, g):
        return True


@dataclass(frozen=True)
class CaseB(CentralizerDesc):
    root_e: tuple
    tag = "B"

    def generators(self, G):
        return _free_gens(G) + [("root_E", self.root_e)]

    def contains(self, G, g):
        return is_power_of(G.retract(G.to_word(g, with_lambda=False), "E"), self.root_e)


@dataclass(frozen=True)
class CaseC(CentralizerDesc):
    root_f: tuple
    tag = "C"

    def generators(self, G):
        return [("root_F", self.root_f)] + _kernel_gens(G)

    def contains(self, G, g):
        return G.e_sigma(g.e) == 0 and is_power_of(g.f, self.root_f)


@dataclass(frozen=True)
class CaseD(CentralizerDesc):
    root_f: tuple
    root_e: tuple
    tag = "D"

    def generators(self, G):
        return [("root_F", self.root_f), ("root_E", self.root_e)]

    def contains(self, G, g):
        e = G.retract(G.to_word(g, with_lambda=False), "E")
        return is_power_of(g.f, self.root_f) and is_power_of(e, self.root_e)


@dataclass(frozen=True)
class CaseE(CentralizerDesc):
    z: object           # PowerWord f . root_E^q
    p: int
    q: int
    f: tuple
    root_h: tuple
    root_e: tuple
    tag = "E"

    def generators(self, G):
        return [("z", self.z)]

    def contains(self, G, g):
        zl = self.q * G.sigma(self.root_e)
        k = G.e_sigma(g.e)
        if k % zl:
            return False
        return G.same(G.pow(G.element(self.z), k // zl), g, "G")[0]


def lcm_exponents(a, b):
    """(p, q) with p a = q b = lcm(a, b) > 0."""
    lcm = abs(a * b) // gcd(a, b)
    return lcm // a, lcm // b


def centralizer_G(G, u, cfg=None, deadline=NO_DEADLINE):
    """Classify Z_G(u) into one of the five cases and return its description."""
    cfg = cfg or Config()
    _check_atoroidal(G, cfg)
    parts = decompose(G, u)
    case = parts.case
    if case == "A":
        return CaseA()
    if case == "B":
        return CaseB(max_root_free(parts.e)[0])
    if case == "C":
        return CaseC(max_root_free(parts.f)[0])
    if case == "D":
        return CaseD(max_root_free(parts.f)[0], max_root_free(parts.e)[0])
    root_h, _ = max_root_H(G, parts.h, cfg, deadline)
    root_e, _ = max_root_free(parts.e)
    return _case_e(G, u, root_h, root_e)


def _case_e(G, u, root_h, root_e):
    p, q = lcm_exponents(G.sigma(root_h), G.sigma(root_e))
    f = G.pow(G.element(root_h), p).f
    z = PowerWord.of((f, 1), (root_e, q))
    desc = CaseE(z, p, q, f, root_h, root_e)
    assert G.conjugates_in(u, desc.z, u, "G")[0], "centralizer generator does not commute"
    return desc


# conjugator families ------------------------------------------------------------------

@dataclass
class ConjugatorFamily:
    """All g with u g = g v in G: ``base`` translated by the centralizer of u.

    ``complete`` is False in case E when the maximal root of u_H could not be
    settled; the family is then the translate of a finite-index subgroup.
    """

    case: str
    x0: tuple
    w0: tuple
    base: object
    roots: dict = field(default_factory=dict)
    bezout: tuple = ()
    complete: bool = True

    def member(self, G, *params):
        """The conjugator with the given parameters (see ``params_help``)."""
        c, r = self.case, self.roots
        if c == "A":
            (word,) = params or ((),)
            return PowerWord.of((word, 1), (self.base, 1))
        if c == "B":
            f, q = params or ((), 0)
            return PowerWord.of((f, 1), (r["E"], q), (self.x0, 1))
        if c == "C":
            p, e0 = params or (0, ())
            if G.sigma(e0):
                raise DomainError("the E-factor of a case C conjugator needs s-exponent 0")
            return PowerWord.of((r["F"], p), (self.base, 1), (e0, 1))
        if c == "D":
            p, q = params or (0, 0)
            return PowerWord.of((r["F"], p), (r["E"], q), (self.base, 1))
        (k,) = params or (0,)
        p0, q0 = self.bezout
        dp, dq = lcm_exponents(G.sigma(r["H"]), G.sigma(r["E"]))
        return self._case_e_word(G, p0 + k * dp, q0 + k * dq)

    def _case_e_word(self, G, p, q):
        r = self.roots
        sigma_h = p * G.sigma(r["H"]) + G.sigma(self.w0)
        return PowerWord.of((r["H"], p), (self.w0, 1), (_s_power(G, -sigma_h), 1),
                            (r["E"], q), (self.x0, 1))

    params_help = {
        "A": "any word g: g . base",
        "B": "(f in F, q): f root_E^q x0",
        "C": "(p, e0 with sigma(e0)=0): root_F^p w0 e0",
        "D": "(p, q): root_F^p root_E^q (w0)_F x0",
        "E": "k: root_H^p w0 s^-sigma root_E^q x0 with (p, q) = bezout + k (lcm/a, lcm/b)",
    }

    def sample(self, G, rng, count=10, length=4):
        """``count`` random members."""
        out = []
        for _ in range(count):
            c = self.case
            if c == "A":
                out.append(self.member(G, _random_word(rng, G.allowed("G"), length)))
            elif c == "B":
                out.append(self.member(G, _random_word(rng, G.allowed("F"), length),
                                       rng.randint(-3, 3)))
            elif c == "C":
                e0 = _random_word(rng, G.allowed("E"), length)
                e0 = e0 + _s_power(G, -G.sigma(e0))
                out.append(self.member(G, rng.randint(-3, 3), e0))
            elif c == "D":
                out.append(self.member(G, rng.randint(-3, 3), rng.randint(-3, 3)))
            else:
                out.append(self.member(G, rng.randint(-2, 2)))
        return out


def _random_word(rng, letters, length):
    letters = sorted(letters)
    return free_reduce(rng.choice(letters) * rng.choice((1, -1)) for _ in range(length))


def conjugator_family_G(G, u, v, cfg=None, deadline=NO_DEADLINE):
    """The conjugators from u to v in G as a ConjugatorFamily, or None if u, v
    are not conjugate in G.  Raises Undecided when an H-search runs out.
    """
    cfg = cfg or Config()
    _check_atoroidal(G, cfg)
    pu, pv = decompose(G, u), decompose(G, v)
    case = pu.case
    if case == "A":
        return ConjugatorFamily("A", (), (), ()) if pv.case == "A" else None
    if pu.sigma != pv.sigma:
        return None
    x0 = conjugate_in_E(G, pu.e, pv.e)
    if x0 is None:
        return None
    if case == "B":
        if pv.h:
            return None
        return ConjugatorFamily("B", x0, (), x0, {"E": max_root_free(pu.e)[0]})
    w0 = conjugate_in_H(G, pu.h, pv.h, cfg, deadline)
    if w0 is None:
        return None
    if case == "C":
        if pv.e:
            return None
        return ConjugatorFamily("C", x0, w0, w0, {"F": max_root_free(pu.f)[0]})
    if case == "D":
        if G.sigma(x0) != G.sigma(w0):
            return None
        w1 = G.normalize(w0).f + x0
        return ConjugatorFamily("D", x0, w0, w1,
                                {"F": max_root_free(pu.f)[0], "E": max_root_free(pu.e)[0]})
    return _family_e(G, pu, x0, w0, cfg, deadline)


def _family_e(G, pu, x0, w0, cfg, deadline):
    root_e, _ = max_root_free(pu.e)
    rhs = G.sigma(x0) - G.sigma(w0)
    complete = True
    try:
        root_h, _ = max_root_H(G, pu.h, cfg, deadline)
    except Undecided:
        # u_H itself generates a finite-index subgroup of its centralizer in H;
        # sigma(root_E) divides sigma(u_H), so this settles every divisible rhs
        if rhs % G.sigma(root_e):
            raise
        root_h, complete = pu.h, False
    sol = bezout_lcm(G.sigma(root_h), -G.sigma(root_e), rhs)
    if sol is None:
        return None
    fam = ConjugatorFamily("E", x0, w0, None, {"H": root_h, "E": root_e},
                           tuple(sol.values), complete)
    fam.base = fam._case_e_word(G, *sol.values)
    return fam


@dataclass(frozen=True)
class BestConjugator:
    word: object        # PowerWord
    length: int         # length of the freely reduced word
    Sigma: int
    sigma: int
    family: ConjugatorFamily


def conjugator_stats(G, w):
    """(length, Sigma, sigma) of a word or PowerWord after free reduction."""
    if isinstance(w, PowerWord):
        letters = free_reduce(w.letters(G.word_budget))
    else:
        letters = free_reduce(w)
    return len(letters), G.Sigma(letters), G.sigma(letters)


def best_conjugator_G(G, u, v, cfg=None, deadline=NO_DEADLINE):
    """The case E conjugator built from the lcm-bounded Bezout solution, with its statistics.

    Requires sigma(u) != 0 with both u_H and u_E non-trivial; returns None
    when u and v are not conjugate.
    """
    cfg = cfg or Config()
    pu = decompose(G, u)
    if pu.case != "E":
        raise DomainError(f"best_conjugator_G needs a case E element, got case {pu.case}")
    fam = conjugator_family_G(G, u, v, cfg, deadline)
    if fam is None:
        return None
    w = fam.base
    ok, _ = G.conjugates_in(u, w, v, "G")
    assert ok, "conjugator certificate failed"
    return BestConjugator(w, *conjugator_stats(G, w), fam)


