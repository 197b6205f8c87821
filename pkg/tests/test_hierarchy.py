import random

import pytest

from conjlen.errors import MalformedInput, ResourceError
from conjlen.hierarchy import (
    FiniteSolver, FreeSolver, Presentation, ackermann, hydra_presentation, lambda_presentation,
    mihailova_check, mihailova_generators, solver_for,
)
from conjlen.suites import GOLDEN_DIR, unfolded_ackermann

KLEIN = Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2, 1, 2)))


def test_ackermann_small_values():
    assert [ackermann(0, n) for n in range(4)] == [2, 3, 4, 5]
    assert [ackermann(1, n) for n in range(4)] == [0, 2, 4, 6]
    assert [ackermann(2, n) for n in range(5)] == [2, 4, 8, 16, 32]
    assert [ackermann(3, n) for n in range(3)] == [2, 8, 512]


@pytest.mark.parametrize("k, n", [(k, n) for k in range(3) for n in range(3)])
def test_ackermann_recursion(k, n):
    assert ackermann(k + 1, n + 1) == ackermann(k, ackermann(k + 1, n))
    assert ackermann(k, n) == unfolded_ackermann(k, n)


def test_ackermann_third_level_doubles_exponent_plus_one():
    for n in range(3):
        assert ackermann(3, n + 1) == 2 ** (ackermann(3, n) + 1)


def test_ackermann_refusals():
    assert ackermann(3, 3) == 2 ** 513
    with pytest.raises(ResourceError):
        ackermann(3, 4)
    with pytest.raises(ResourceError):
        ackermann(5, 5)
    with pytest.raises(MalformedInput):
        ackermann(-1, 2)


@pytest.mark.parametrize("name, pres", [
    ("hydra1.txt", hydra_presentation(1)),
    ("hydra3.txt", hydra_presentation(3)),
    ("lambda.txt", lambda_presentation()),
])
def test_golden_presentations(name, pres):
    assert pres.dumps() == (GOLDEN_DIR / name).read_text()


def test_presentation_round_trip(tmp_path):
    for pres in (hydra_presentation(2), lambda_presentation(), KLEIN):
        assert Presentation.loads(pres.dumps()) == pres
        pres.save(tmp_path / "p.txt")
        assert Presentation.load(tmp_path / "p.txt") == pres
    with pytest.raises(MalformedInput):
        Presentation.loads("a b\n")


def test_mihailova_generators_examples():
    fib = mihailova_generators(KLEIN)
    assert fib.diagonal == (((1,), (1,)), ((2,), (2,)))
    assert fib.relator == (((1, 1), ()), ((2, 2), ()), ((1, 2, 1, 2), ()))
    assert len(mihailova_generators(Presentation(("a", "b"), ())).all) == 2
    hydra = mihailova_generators(hydra_presentation(1))
    assert (len(hydra.diagonal), len(hydra.relator)) == (3, 2)


def test_solvers():
    assert isinstance(solver_for(Presentation(("a", "b"), ())), FreeSolver)
    klein = FiniteSolver(KLEIN)
    assert klein.order == 4
    assert klein.is_trivial((1, 2, 1, 2)) and not klein.is_trivial((1, 2))


def test_mihailova_check_klein_and_free():
    rep = mihailova_check(KLEIN, FiniteSolver(KLEIN), ball_radius=4, rng=random.Random(1))
    assert rep.passed
    free = Presentation(("a", "b"), ())
    assert mihailova_check(free, FreeSolver(free), ball_radius=4).passed
