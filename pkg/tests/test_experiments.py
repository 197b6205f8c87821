from conjlen import LambdaGroup
from conjlen.experiments import (
    commutator_witness, experiment_cl_family, experiment_distortion, family_lower_bound,
    fit_h_constant, to_csv,
)

G = LambdaGroup()


def test_distortion_rows():
    rows = experiment_distortion(G, 16)
    assert [r["n"] for r in rows] == list(range(1, 17))
    assert rows[0]["exact"] == 1 and rows[0]["witness_lower"] is None
    assert rows[15]["witness_lower"] == 3
    bounds = [r["upper_bound"] for r in rows]
    assert bounds == sorted(bounds)
    for r in rows:
        if r["exact"] is not None:
            assert r["exact"] <= r["upper_bound"]
            if r["witness_lower"] is not None:
                assert r["witness_lower"] <= r["exact"]


def test_commutator_witness_length():
    for n in range(6):
        assert len(commutator_witness(G, n)) == 4 * n + 4


def test_h_constant():
    c_h, lengths = fit_h_constant(G, 4)
    assert c_h == 1 and lengths[1] == 1


def test_family_lower_bound():
    assert family_lower_bound(1, {1: 1}, 1) == 1
    assert family_lower_bound(9, {}, 1) == 5


def test_cl_family_rows():
    rows = experiment_cl_family(G, 3)
    assert [(r["n"], r["f"], r["constructed"], r["exact"]) for r in rows] == [
        (1, 1, 1, 1), (2, 1, 1, 1), (3, 3, 3, 3)]
    assert all(r["certified"] == "certified" for r in rows)
    assert to_csv(rows).splitlines()[0].startswith("n,input_length,f,")
