import itertools

from conjlen import LambdaGroup
from conjlen.oracle import (
    ball, centralizer_ball, distortion_scan, geodesic_length, min_conjugator, witness_lower,
)
from conjlen.words import conjugate_in_free, free_reduce

G = LambdaGroup()
P = G.parse


def test_ball_sizes():
    assert len(ball(G, "F", 1)) == 7
    assert len(ball(G, "E", 2)) == 17
    assert len(ball(G, "L", 3)) == 887


def test_ball_layers_are_disjoint():
    index = ball(G, "G", 3)
    seen = set()
    for r, layer in enumerate(index.layers):
        assert not seen & set(layer)
        seen |= set(layer)
        assert all(index.length(k) == r for k in layer)


def test_min_conjugator_examples():
    assert min_conjugator(G, "F", P("a1 a2"), P("a2 a1"), 3)[1] == 1
    assert min_conjugator(G, "L", P("a1 t l"), P("a1 t"), 3)[1] == 1
    assert min_conjugator(G, "G", P("a1"), P("a2"), 3) == ((G.S,), 1)
    assert min_conjugator(G, "F", P("a1"), P("a2"), 4) is None


def test_centralizer_ball_examples():
    assert len(centralizer_ball(G, P("a1 t"), 2)) == 13
    assert len(centralizer_ball(G, P("t"), 1)) == 9
    assert len(centralizer_ball(G, (), 2)) == len(list(ball(G, "G", 2).items(2)))


def test_geodesic_length_of_commutator():
    assert geodesic_length(G, "L", P("t a1 t^-1 a1^-1"), 4) == 1
    assert geodesic_length(G, "L", P("a1 a2 a3"), 2) is None


def test_distortion_scan_monotone_and_above_witness():
    rows = distortion_scan(G, 8)
    values = [r["exact_or_bound"] for r in rows]
    assert values == sorted(values)
    for r in rows:
        if r["witness_lower"] is not None:
            assert r["witness_lower"] <= r["exact_or_bound"]
    assert witness_lower(G, 3) is None and witness_lower(G, 20) == G.phi.stretch(1, 4)


def test_min_conjugator_agrees_with_free_conjugacy():
    letters = (1, -1, 2, -2)
    words = sorted({free_reduce(w) for n in range(4) for w in itertools.product(letters, repeat=n)})
    for u in words:
        for v in words:
            hit = min_conjugator(G, "F", u, v, 5)
            assert (hit is not None) == (conjugate_in_free(u, v) is not None)
