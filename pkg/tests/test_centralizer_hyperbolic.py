import random

import pytest

from conjlen import LambdaGroup
from conjlen.centralizer import (
    best_conjugator_G, centralizer_G, conjugator_family_G, conjugator_stats, decompose,
)
from conjlen.errors import DomainError
from conjlen.hyperbolic import conjugate_in_H, max_root_H
from conjlen.oracle import min_conjugator
from conjlen.suites import REPRESENTATIVES, random_case_e_pair, random_conjugate_pair

G = LambdaGroup()
P = G.parse


@pytest.mark.parametrize("word, root, mult", [
    ("a1 a1", "a1", 2),
    ("s s", "s", 2),
    ("a1 s", "a1 s", 1),
])
def test_max_root_examples(word, root, mult):
    r, k = max_root_H(G, P(word))
    assert (G.format(r), k) == (root, mult)


def test_max_root_certified():
    r, k = max_root_H(G, P("a2 s a1^-1 s a1"))
    assert k == 1
    assert G.normalize(r) == G.normalize(P("a2 s a1^-1 s a1"))
    r, k = max_root_H(G, P("a2 s a1^-1 s a1") * 3)
    assert k == 3 and G.pow(G.normalize(r), 3) == G.normalize(P("a2 s a1^-1 s a1") * 3)
    with pytest.raises(DomainError):
        max_root_H(G, P("a1 a1^-1"))


def test_conjugate_in_H_examples():
    w = conjugate_in_H(G, P("a1"), P("a2"))
    assert G.conjugates_in(P("a1"), w, P("a2"), "H")[0]
    assert conjugate_in_H(G, P("a1"), P("a1^-1")) is None
    assert min_conjugator(G, "H", P("a1"), P("a1^-1"), 5) is None


@pytest.mark.parametrize("case", sorted(REPRESENTATIVES))
def test_representatives_classify(case):
    for word in REPRESENTATIVES[case]:
        assert decompose(G, P(word)).case == case
        desc = centralizer_G(G, P(word))
        assert desc.tag == case
        for _, gen in desc.generators(G):
            assert G.conjugates_in(P(word), gen, P(word), "G")[0]


def test_centralizer_descriptions():
    assert centralizer_G(G, P("t^2")).describe(G).endswith("root_E=t")
    assert centralizer_G(G, P("a2^3")).describe(G).startswith("case C: root_F=a2")
    assert centralizer_G(G, P("a1 t^2")).describe(G) == "case D: root_F=a1, root_E=t"
    assert centralizer_G(G, P("s^2")).describe(G) == "case E: z=s"
    desc = centralizer_G(G, P("a1 t"))
    assert desc.contains(G, G.normalize(P("a1 t"))) and not desc.contains(G, G.normalize(P("s")))


def test_family_members_conjugate():
    rng = random.Random(11)
    for _ in range(100):
        u, v = random_conjugate_pair(G, rng, v_len=6, g_len=4)
        fam = conjugator_family_G(G, u, v)
        assert fam is not None
        for w in fam.sample(G, rng, count=3, length=3):
            assert G.conjugates_in(u, w, v, "G")[0]


def test_not_conjugate_family_is_none():
    assert conjugator_family_G(G, P("a1"), P("a1^-1")) is None
    assert conjugator_family_G(G, P("t"), P("t^2")) is None


def test_best_conjugator_trivial_pair():
    best = best_conjugator_G(G, P("s"), P("s"))
    assert best.length == 0 and best.Sigma == 0
    with pytest.raises(DomainError):
        best_conjugator_G(G, P("a1"), P("a1"))


def test_best_conjugator_random_case_e():
    rng = random.Random(5)
    for _ in range(10):
        u, v = random_case_e_pair(G, rng)
        best = best_conjugator_G(G, u, v)
        assert best is not None
        assert G.conjugates_in(u, best.word, v, "G")[0]
        assert (best.length, best.Sigma, best.sigma) == conjugator_stats(G, best.word)
