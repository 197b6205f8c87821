"""Deciding conjugacy in Lambda, the central extension of G by <l>.

Strip the l-letters: u-bar = u l^Lu and v-bar = v l^Lv.  If u, v are conjugate
in G with conjugator w then ``u-bar w = w v-bar l^D`` for some integer D, and
for c in Z_G(u) the map ``delta(c)``, defined by ``u c = c u l^delta(c)``, is a
homomorphism to Z.  Every G-conjugator is c w for some c in Z_G(u), and

    u-bar (c w) = (c w) v-bar l^(delta(c) + D),

so u-bar and v-bar are conjugate in Lambda exactly when -D lies in the image of
delta, an ideal of Z generated by delta of generators of Z_G(u):

* A: delta = 0.
* B: delta(a_i) = n_i, delta(root_E) = 0.
* C: delta(s^-i t s^i) for i < m generate the image on E0 (the rest follow by
  Cayley-Hamilton since the characteristic polynomial of Phi is monic with
  unit constant term); delta(root_F) = 0.
* D: delta(root_F) and delta(root_E).
* E: delta(z).

All defects are computed from abelian normal forms, so the integers stay exact
even when the conjugators are exponentially long; those are returned as
products of powers.
"""

from dataclasses import dataclass, field

from .centralizer import _case_e, conjugator_family_G, decompose
from .config import NO_DEADLINE, Config
from .diophantine import multi_bezout
from .errors import MalformedInput
from .errors import Undecided as UndecidedError
from .hyperbolic import conjugate_in_H
from .normal_form import PowerWord
from .words import conjugate_in_free, free_reduce


@dataclass
class DefectConstants:
    """Integers met along the way; fields not relevant to the case stay None."""

    lambda_u: int = 0
    lambda_v: int = 0
    base_defect: int = None      # N with u w = w v l^N for the G-conjugator w
    target: int = None           # the value -D that delta has to reach
    twist_defects: tuple = None  # delta(a_i), case B
    ideal: tuple = None          # delta(s^-i t s^i), case C
    P: int = None                # delta(root_F), case D
    Q: int = None                # delta(root_E), case D
    M: int = None                # delta(z), case E

    def as_dict(self):
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class Certificate:
    ok: bool
    exact: bool
    transcript: tuple

    @property
    def label(self):
        if not self.ok:
            return "failed"
        return "certified" if self.exact else "abelian-certified"


@dataclass(frozen=True)
class Conjugate:
    w: object
    case: str = ""
    certificate: Certificate = None
    constants: DefectConstants = field(default_factory=DefectConstants)
    status = "conjugate"


@dataclass(frozen=True)
class NotConjugate:
    reason: str
    case: str = ""
    constants: DefectConstants = field(default_factory=DefectConstants)
    status = "not-conjugate"


@dataclass(frozen=True)
class Undecided:
    radius: int
    reason: str = ""
    status = "undecided"


def certify(G, u, w, v, group="L"):
    """Check u w = w v in ``group`` and keep the two normal forms as a transcript."""
    left = G.product(u, w)
    right = G.product(w, v)
    ok, exact = G.same(left, right, group)
    transcript = (
        f"u.w = {G.format_element(left, group)}",
        f"w.v = {G.format_element(right, group)}",
        f"equal in {group}: {ok} ({'exact' if exact else 'F-parts beyond budget; abelian trace only'})",
    )
    return Certificate(ok, exact, transcript)


# G ---------------------------------------------------------------------------

def conjugate_in_G(G, u, v, cfg=None, deadline=NO_DEADLINE):
    """(w, case) with u w = w v in G, or None.  Raises Undecided from H-searches."""
    fam = conjugator_family_G(G, u, v, cfg, deadline)
    if fam is None:
        return None
    ok, _ = G.conjugates_in(u, fam.base, v, "G")
    assert ok, "G-conjugator certificate failed"
    return fam.base, fam.case


# Lambda --------------------------------------------------------------------------

def _delta(G, u, c):
    n = G.lambda_defect(u, c, u)
    assert n is not None, "centralizer element does not commute with u"
    return n


def conjugate_in_Lambda(G, u_bar, v_bar, cfg=None, deadline=NO_DEADLINE):
    """Decide whether u-bar and v-bar are conjugate in Lambda; returns a
    Conjugate, NotConjugate or Undecided result."""
    cfg = cfg or Config()
    u, lu = G.strip_lambda(u_bar)
    v, lv = G.strip_lambda(v_bar)
    consts = DefectConstants(lambda_u=lu, lambda_v=lv)
    case = decompose(G, u).case
    try:
        fam = conjugator_family_G(G, u, v, cfg, deadline)
    except UndecidedError as exc:
        return Undecided(exc.radius, str(exc))
    if fam is None:
        return NotConjugate("not conjugate in G", case, consts)
    consts.base_defect = G.lambda_defect(u, fam.base, v)
    target = -(consts.base_defect + lu - lv)
    consts.target = target

    def done(w):
        cert = certify(G, u_bar, w, v_bar)
        assert cert.ok, "Lambda-conjugator certificate failed"
        return Conjugate(w, case, cert, consts)

    if case == "A":
        if target:
            return NotConjugate("central exponents differ", case, consts)
        return done(PowerWord.of((fam.base, 1)))

    if case == "B":
        n = tuple(_delta(G, u, (i,)) for i in range(1, G.m + 1))
        consts.twist_defects = n
        sol = multi_bezout(n, target)
        if sol is None:
            return NotConjugate("defect not in the ideal of delta(a_i)", case, consts)
        factors = [((i + 1,), a) for i, a in enumerate(sol.values)]
        return done(PowerWord.of(*factors, (fam.base, 1)))

    if case == "C":
        gens = [(-G.S,) * i + (G.T,) + (G.S,) * i for i in range(G.m)]
        ideal = tuple(_delta(G, u, g) for g in gens)
        consts.ideal = ideal
        sol = multi_bezout(ideal, target)
        if sol is None:
            return NotConjugate("defect not in the ideal of delta(s^-i t s^i)", case, consts)
        factors = []
        for i, k in enumerate(sol.values):
            factors += [((G.S,), -i), ((G.T,), k), ((G.S,), i)]
        return done(PowerWord.of(*factors, (fam.base, 1)))

    if case == "D":
        root_f, root_e = fam.roots["F"], fam.roots["E"]
        consts.P = _delta(G, u, root_f)
        consts.Q = _delta(G, u, root_e)
        sol = multi_bezout((consts.P, consts.Q), target)
        if sol is None:
            return NotConjugate("p P + q Q = -D has no solution", case, consts)
        p, q = sol.values
        return done(PowerWord.of((root_f, p), (root_e, q), (fam.base, 1)))

    # case E
    desc = _case_e(G, u, fam.roots["H"], fam.roots["E"])
    z = desc.z.letters(G.word_budget)
    M = _delta(G, u, desc.z)
    consts.M = M
    base = fam.base.letters(G.word_budget) if isinstance(fam.base, PowerWord) else fam.base
    if M == 0:
        if target:
            return NotConjugate("delta(z) = 0 but the defect is non-zero", case, consts)
        return done(PowerWord.of((base, 1)))
    if target % M == 0:
        return done(PowerWord.of((z, target // M), (base, 1)))
    if fam.complete:
        return NotConjugate("delta(z) does not divide the defect", case, consts)
    return Undecided(None, "maximal root of u_H unresolved and the power of u_H used does not settle the defect")


# dispatch -------------------------------------------------------------------------------

def conjugate(G, u, v, group="L", cfg=None, deadline=NO_DEADLINE):
    """Conjugacy of two words in one of F, E, H, G or Lambda as a result object."""
    cfg = cfg or Config()
    G.check_group(u, group)
    G.check_group(v, group)
    if group in ("F", "E"):
        w = conjugate_in_free(u, v)
        if w is None:
            return NotConjugate(f"cyclic reductions differ in {group}")
        return Conjugate(w, certificate=certify(G, u, w, v, group))
    if group == "H":
        try:
            w = conjugate_in_H(G, u, v, cfg, deadline)
        except UndecidedError as exc:
            return Undecided(exc.radius, str(exc))
        if w is None:
            return NotConjugate("not conjugate in H")
        return Conjugate(w, certificate=certify(G, u, w, v, "H"))
    if group == "G":
        try:
            hit = conjugate_in_G(G, u, v, cfg, deadline)
        except UndecidedError as exc:
            return Undecided(exc.radius, str(exc))
        if hit is None:
            return NotConjugate("not conjugate in G", decompose(G, u).case)
        w, case = hit
        return Conjugate(w, case, certify(G, u, w, v, "G"))
    if group == "L":
        return conjugate_in_Lambda(G, u, v, cfg, deadline)
    raise MalformedInput(f"unknown group {group!r}")


def reduced_word(G, w):
    """Expand a PowerWord within the word budget."""
    if isinstance(w, PowerWord):
        return free_reduce(w.letters(G.word_budget))
    return free_reduce(w)
