import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjlen import LambdaGroup
from conjlen.errors import MalformedInput, ResourceError
from conjlen.experiments import commutator_witness
from conjlen.hierarchy import lambda_presentation
from conjlen.words import free_reduce, invert

G = LambdaGroup()
P = G.parse
lam_words = st.lists(st.sampled_from([x for g in range(1, 7) for x in (g, -g)]), max_size=16).map(free_reduce)
g_words = st.lists(st.sampled_from([x for g in range(1, 6) for x in (g, -g)]), max_size=16).map(free_reduce)


def nf(text):
    x = G.normalize(P(text))
    return G.format(x.f), G.format(G.to_word(G.from_e(x.e), with_lambda=False)), x.n


def test_normalize_examples():
    assert nf("t a1") == ("a1", "t", 1)
    assert nf("s a1") == ("a3 a2^-1 a1^-1", "s", 0)
    assert nf("t^-1 s^-3 a1^-1 s^3 t s^-3 a1 s^3") == ("1", "1", 3)


def test_abelian_examples():
    for text in ("t a1", "s a1", "t^-1 s^-3 a1^-1 s^3 t s^-3 a1 s^3"):
        full, ab = G.normalize(P(text)), G.normalize(P(text), abelian=True)
        assert ab.f is None
        assert (full.alpha, full.e, full.n) == (ab.alpha, ab.e, ab.n)
    x = G.normalize(commutator_witness(G, 30), abelian=True)
    assert x.n == G.phi.stretch(1, 30) and not x.e and not any(x.alpha)
    y = G.normalize(P("s t s^-1"), abelian=True)
    assert y.alpha == (0, 0, 0) and y.n == 0 and G.format(G.to_word(G.from_e(y.e))) == "s t s^-1"


def test_sigma_examples():
    assert (G.sigma(P("s s t s^-1")), G.Sigma(P("s s t s^-1"))) == (1, 2)
    assert (G.sigma(()), G.Sigma(())) == (0, 0)
    assert (G.sigma(P("s^-3 a1 s^3")), G.Sigma(P("s^-3 a1 s^3"))) == (0, 3)


def test_retract_examples():
    assert G.retract(P("a1 t s"), "H") == P("a1 s")
    assert G.retract(P("a1 t s"), "E") == P("t s")
    assert G.retract(P("a1 t s"), "Z") == 1
    assert G.retract(P("t t^-1"), "H") == ()
    assert G.retract(P("s a1 l t"), "H") == P("s a1")
    assert G.retract(P("s a1 l t"), "E") == P("s t")


def test_equal_examples():
    assert G.equal(P("s^-1 a1 s"), P("a2"), "H")
    assert G.equal(P("t a1"), P("a1 t"), "G")
    assert not G.equal(P("t a1"), P("a1 t"), "L")
    assert G.equal(P("a1 s t"), P("a1 s t"), "L")
    with pytest.raises(MalformedInput):
        G.equal(P("t"), P("t"), "H")


def test_lambda_defect_examples():
    assert G.lambda_defect(P("a1 t"), P("t"), P("a1 t")) == -1
    assert G.lambda_defect(P("a1 s t"), (), P("a1 s t")) == 0
    # l-letters simply shift the defect
    assert G.lambda_defect(P("a1 t l^3"), (), P("a1 t")) == 3
    assert G.lambda_defect(P("a1"), (), P("a2")) is None


def test_word_budget():
    small = LambdaGroup(word_budget=50)
    with pytest.raises(ResourceError):
        small.normalize(P("s^-12 a1 s^12"))
    assert small.normalize(P("s^-12 a1 s^12"), abelian=True).alpha == G.phi.abelian((1, 0, 0), 12)


@settings(max_examples=200)
@given(lam_words, st.integers(0, 10), st.sampled_from(lambda_presentation().relators), st.booleans())
def test_relator_insertion_is_invisible(w, pos, r, flip):
    r = invert(r) if flip else tuple(r)
    i = min(pos, len(w))
    assert G.normalize(w[:i] + r + w[i:]) == G.normalize(w)


@given(lam_words)
def test_abelian_agreement(w):
    x, y = G.normalize(w), G.normalize(w, abelian=True)
    assert (x.alpha, x.e, x.n) == (y.alpha, y.e, y.n)
    vec = [0, 0, 0]
    for z in x.f:
        vec[abs(z) - 1] += 1 if z > 0 else -1
    assert tuple(vec) == x.alpha


@given(lam_words)
def test_l_is_central(w):
    assert G.normalize((G.L,) + w) == G.normalize(w + (G.L,))


@given(lam_words, lam_words)
def test_sigma_statistics(u, v):
    assert G.Sigma(u + v) <= G.Sigma(u) + G.Sigma(v)
    for target in ("H", "E"):
        assert len(G.retract(u, target)) <= len(u)


@given(lam_words, lam_words)
def test_mul_matches_concatenation(u, v):
    assert G.mul(G.normalize(u), G.normalize(v)) == G.normalize(u + v)
    assert G.mul(G.normalize(u), G.inv(G.normalize(u))) == G.identity


def test_distortion_witness_up_to_20():
    for n in range(21):
        x = G.normalize(commutator_witness(G, n))
        assert (x.f, x.e, x.n) == ((), (), G.phi.stretch(1, n))


@given(g_words)
def test_shuffling_bound_as_stated(w):
    # |N| <= |l| + alpha C^Sigma(W), with l = 0 for words over a, s, t
    alpha = sum(1 for x in w if G.is_a(x))
    assert abs(G.normalize(w).n) <= alpha * G.phi.growth ** G.Sigma(w)
