import random

import pytest

from alexkit.classical import spun_knot
from alexkit.laurent import (
    ONE, NotDivisible, ZeroEvaluationPoint, canonicalize, exact_divide, involute, parse,
)
from alexkit.modulecalc import (
    HYPOTHESIS, INCONCLUSIVE, OBSTRUCTED, ModulePresentation, connected_sum, elementary_ideal,
    evaluate_ideal, from_seifert, mirror, mirror_sum_obstruction,
)
from alexkit.seifert import (
    LaurentMatrix, SeifertPair, ZeroDeterminant, alexander, block_diagonal, involute_matrix,
)

from oracles import random_poly

P = parse


def mod(rows):
    return ModulePresentation(LaurentMatrix([[P(x) for x in r] for r in rows]))


SIX_ONE = from_seifert(spun_knot("six_one"))
BLOCK = mod([["2*t - 1", "0"], ["0", "2*t^-1 - 1"]])


def test_six_one_presentation():
    assert SIX_ONE == mod([["t - 1", "t"], ["-1", "-2*t + 2"]])


def test_mirror():
    assert mirror(mirror(SIX_ONE)) == SIX_ONE
    assert mirror(mod([["2*t - 1"]])) == mod([["2*t^-1 - 1"]])
    assert mirror(SIX_ONE).alexander() == canonicalize(involute(SIX_ONE.alexander()))


def test_connected_sum():
    empty = ModulePresentation(LaurentMatrix([]))
    assert connected_sum(SIX_ONE, empty) == SIX_ONE
    assert empty.alexander() == ONE
    assert BLOCK.alexander() == canonicalize(P("2*t - 1") * P("2 - t"))
    s = connected_sum(SIX_ONE, mirror(SIX_ONE))
    assert s.alexander() == canonicalize(SIX_ONE.det() * involute(SIX_ONE.det()))


def test_elementary_ideals():
    assert elementary_ideal(SIX_ONE, 1) == [SIX_ONE.alexander()]
    e2 = elementary_ideal(SIX_ONE, 2)
    assert ONE in e2
    assert elementary_ideal(BLOCK, 2) == [P("2*t - 1"), P("-t + 2")]
    assert elementary_ideal(SIX_ONE, 3) == [ONE]
    with pytest.raises(IndexError):
        elementary_ideal(SIX_ONE, 0)


def test_evaluate_ideal():
    assert evaluate_ideal(elementary_ideal(SIX_ONE, 2), -1) == 1
    assert evaluate_ideal([P("2*t - 1"), P("2*t^-1 - 1")], -1) == 3
    assert evaluate_ideal([P("t - 1")], 1) == 0
    assert evaluate_ideal([], -1) == 0
    with pytest.raises(ZeroEvaluationPoint):
        evaluate_ideal([ONE], 0)


def test_obstruction_six_one():
    rep = mirror_sum_obstruction(SIX_ONE)
    assert rep.verdict == OBSTRUCTED and rep.obstructed
    assert rep.witness_point == -1
    assert rep.e2_images == {-1: 1}
    assert set(rep.pairings) == {P("2*t - 1"), P("-t + 2")}
    assert all(rep.pairing_gcds[(g, -1)] == 3 for g in rep.pairings)
    assert HYPOTHESIS in rep.explanation


def test_obstruction_block_and_unknot():
    rep = mirror_sum_obstruction(BLOCK)
    assert rep.verdict == INCONCLUSIVE and rep.e2_images == {-1: 3}
    rep = mirror_sum_obstruction(ModulePresentation(LaurentMatrix([])))
    assert rep.verdict == INCONCLUSIVE and rep.pairings == (ONE,)
    assert rep.pairing_gcds[(ONE, -1)] == 1


def test_obstruction_without_pairings():
    rep = mirror_sum_obstruction(from_seifert(spun_knot("trefoil")))
    assert rep.verdict == INCONCLUSIVE and rep.pairings == ()
    assert "no factorization" in rep.explanation


def test_obstruction_point_restriction_and_singular():
    with pytest.raises(ValueError):
        mirror_sum_obstruction(SIX_ONE, points=(2,))
    with pytest.raises(ZeroDeterminant):
        mirror_sum_obstruction(mod([["0"]]))
    assert mirror_sum_obstruction(SIX_ONE, points=(1,)).verdict == INCONCLUSIVE


def test_square_knot_is_inconclusive():
    rep = mirror_sum_obstruction(from_seifert(spun_knot("square_knot")))
    assert rep.verdict == INCONCLUSIVE


def _random_module(rng, n):
    return ModulePresentation(LaurentMatrix([[random_poly(rng, max_len=3) for _ in range(n)] for _ in range(n)]))


def test_det_laws_random():
    rng = random.Random(17)
    for _ in range(60):
        a = _random_module(rng, rng.randint(1, 4))
        b = _random_module(rng, rng.randint(0, 3))
        da, db = a.det(), b.det()
        assert mirror(a).det() == involute(da)
        assert connected_sum(a, b).det() == da * db


def test_ideal_chain_at_units():
    rng = random.Random(23)
    for _ in range(40):
        P_ = _random_module(rng, rng.randint(1, 4))
        for t0 in (1, -1):
            ds = [evaluate_ideal(elementary_ideal(P_, k), t0) for k in range(1, P_.size + 2)]
            for d_k, d_next in zip(ds, ds[1:]):
                # E_k is contained in E_(k+1), so d_(k+1) divides d_k
                assert (d_k == 0) if d_next == 0 else (d_k % d_next == 0)


def test_block_minors_are_multiples_of_a_block_det():
    rng = random.Random(29)
    for _ in range(25):
        n = rng.randint(1, 2)
        A = LaurentMatrix([[random_poly(rng, max_len=2) for _ in range(n)] for _ in range(n)])
        a = A.det()
        if a.is_zero():
            continue
        D = ModulePresentation(block_diagonal(A, involute_matrix(A)))
        ab = involute(a)
        for g in elementary_ideal(D, 2):
            assert _divisible(g, a) or _divisible(g, ab), (g, a)


def _divisible(g, d):
    try:
        exact_divide(g, d)
        return True
    except NotDivisible:
        return False


def test_from_seifert_keeps_alexander():
    s = spun_knot("figure_eight")
    assert from_seifert(s).alexander() == alexander(s)
    assert from_seifert(SeifertPair.empty()).size == 0
