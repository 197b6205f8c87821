import random
from math import gcd

import pytest

from conjlen import LambdaGroup
from conjlen.conjugacy import Undecided, certify, conjugate, reduced_word
from conjlen.errors import MalformedInput
from conjlen.suites import random_conjugate_pair
from conjlen.words import free_reduce

G = LambdaGroup()
P = G.parse


def test_central_shift_examples():
    r = conjugate(G, P("a1 t l^3"), P("a1 t"))
    assert r.status == "conjugate" and r.case == "D"
    assert certify(G, P("a1 t l^3"), r.w, P("a1 t")).ok
    assert G.format(reduced_word(G, r.w)) == "t^3"
    r = conjugate(G, P("l"), ())
    assert r.status == "not-conjugate" and r.case == "A"


def test_case_specific_constants():
    r = conjugate(G, P("t"), P("t l"))
    assert r.status == "conjugate" and r.constants.twist_defects == (1, 1, 1)
    r = conjugate(G, P("a1"), P("a1 l"))
    assert r.status == "conjugate" and r.constants.ideal == (-1, 1, -1)
    r = conjugate(G, P("a1 s t"), P("a1 s t l"))
    assert r.status == "not-conjugate" and r.constants.M == 0


def test_commuting_pair_needs_a_conjugator_in_lambda():
    # t a1 = a1 t l, so they are equal in G but only conjugate in Lambda
    r = conjugate(G, P("t a1"), P("a1 t"))
    assert r.status == "conjugate" and r.certificate.exact


def test_certify_examples():
    cert = certify(G, P("a1"), P("s"), P("a2"), "H")
    assert cert.ok and cert.label == "certified"
    assert not certify(G, P("a1"), (), P("a2"), "H").ok
    assert certify(G, P("a1"), (), P("a2"), "H").label == "failed"


def test_dispatch_groups():
    assert conjugate(G, P("a1 a2"), P("a2 a1"), "F").status == "conjugate"
    assert conjugate(G, P("s t"), P("t s"), "E").status == "conjugate"
    assert conjugate(G, P("a1"), P("a3"), "H").status == "conjugate"
    assert conjugate(G, P("a1"), P("a2 a3"), "G").status == "not-conjugate"
    with pytest.raises(MalformedInput):
        conjugate(G, P("t"), P("t"), "H")
    with pytest.raises(MalformedInput):
        conjugate(G, P("a1"), P("a1"), "Q")


def test_random_pairs_with_central_shift():
    rng = random.Random(3)
    for _ in range(60):
        u, v = random_conjugate_pair(G, rng, v_len=6, g_len=4)
        r = conjugate(G, u, v + (G.L,) * rng.randint(-3, 3))
        assert not isinstance(r, Undecided)
        if r.status == "conjugate":
            assert r.certificate.ok


def _kernel_conjugator(i):
    if i >= 0:
        return (-G.S,) * i + (G.T,) + (G.S,) * i
    return (G.S,) * -i + (G.T,) + (-G.S,) * -i


def test_case_c_ideal_from_first_m_conjugates():
    # the defects of s^-i t s^i for 0 <= i < m already generate the ideal of all |i| <= 2m
    rng = random.Random(8)
    m = G.m
    for _ in range(200):
        f = free_reduce(rng.choice((1, 2, 3, -1, -2, -3)) for _ in range(rng.randint(1, 6)))
        if not f:
            continue
        first = gcd(*(G.lambda_defect(f, _kernel_conjugator(i), f) for i in range(m)))
        wide = gcd(*(G.lambda_defect(f, _kernel_conjugator(i), f) for i in range(-2 * m, 2 * m + 1)))
        assert first == wide


def test_conjugator_length_exponential_report():
    rng = random.Random(4)
    ratios = []
    for _ in range(40):
        u, v = random_conjugate_pair(G, rng, v_len=6, g_len=4)
        r = conjugate(G, u, v)
        assert r.status == "conjugate"
        n = len(u) + len(v)
        ratios.append(len(reduced_word(G, r.w)) / 2 ** n)
    print(f"max |w| / 2^n over 40 pairs: {max(ratios):.4f}")
    assert max(ratios) <= 1
