import random

import pytest

from dwtl import (
    NotThreshold,
    NotThresholdError,
    NotUnate,
    ThresholdRealization,
    TruthTable,
    Unateness,
    chow_parameters,
    enumerate_threshold_functions,
    is_unate,
    minimize_weights,
    solve_threshold,
    threshold_tables_by_search,
)

MAJ3 = TruthTable(3, 0xE8)
MIN3 = TruthTable(3, 0x17)
AND2 = TruthTable(2, 0b1000)
XOR2 = TruthTable(2, 0b0110)
NOT1 = TruthTable(1, 0b01)


def test_chow_maj3():
    cv = chow_parameters(MAJ3)
    assert cv.m0 == 0
    assert cv.m == (2, 2, 2)


def test_chow_and2():
    cv = chow_parameters(AND2)
    assert cv.m0 == -2
    assert cv.m == (1, 1)


def test_chow_constant_zero():
    cv = chow_parameters(TruthTable(2, 0))
    assert cv.m0 == -4
    assert cv.m == (0, 0)


def test_unate_maj3():
    res = is_unate(MAJ3)
    assert isinstance(res, Unateness)
    assert res.polarities == ("+", "+", "+")


def test_unate_xor2():
    res = is_unate(XOR2)
    assert isinstance(res, NotUnate)
    assert res.variable == 0
    lo, hi = res.increasing
    assert hi[0] == 1 and lo[0] == 0 and lo[1:] == hi[1:]
    lo, hi = res.decreasing
    assert lo[1:] == hi[1:]


def test_unate_not():
    res = is_unate(NOT1)
    assert res.polarities == ("-",)


def test_unate_independent_variable():
    # f(x0, x1) = x1 regardless of x0
    f = TruthTable(2, 0b1100)
    assert is_unate(f).polarities == ("0", "+")


def test_solve_and2():
    res = solve_threshold(AND2)
    assert isinstance(res, ThresholdRealization)
    assert res.gate.truth_table() == AND2


def test_solve_xor2_not_threshold():
    res = solve_threshold(XOR2)
    assert isinstance(res, NotThreshold)
    assert res.infeasibility_gap > 0
    assert res.num_constraints == 4


def test_solve_min3_all_negative_weights():
    res = solve_threshold(MIN3)
    assert isinstance(res, ThresholdRealization)
    assert res.gate.truth_table() == MIN3
    assert all(w < 0 for w in res.gate.weights)


def test_chow_sign_consistency():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(1, 4)
        tt = TruthTable(n, rng.randrange(1 << (1 << n)))
        res = solve_threshold(tt)
        if isinstance(res, ThresholdRealization):
            cv = chow_parameters(tt)
            for w, m in zip(res.gate.weights, cv.m):
                if m != 0:
                    assert w == 0 or (w > 0) == (m > 0)


def test_not_unate_implies_not_threshold():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(2, 4)
        tt = TruthTable(n, rng.randrange(1 << (1 << n)))
        if isinstance(is_unate(tt), NotUnate):
            assert isinstance(solve_threshold(tt), NotThreshold)


def test_scaling_of_realizations():
    from dwtl import ThresholdGate

    res = solve_threshold(MAJ3)
    g = res.gate
    for k in (2, 3):
        scaled = ThresholdGate(
            tuple(k * w for w in g.weights), k * g.threshold
        )
        assert scaled.truth_table() == MAJ3


def test_minimize_maj3():
    res = minimize_weights(MAJ3)
    assert res.minimal
    assert res.gate.weights == (1, 1, 1)
    assert res.gate.threshold == 2


def test_minimize_not():
    res = minimize_weights(NOT1)
    assert res.gate.weight_magnitude_sum == 1


def test_minimize_weighted_sum_gate_function():
    from dwtl import SpinMinorityGate

    tt = SpinMinorityGate((-1, -1, -1, -2)).truth_table()
    res = minimize_weights(tt)
    assert res.gate.weight_magnitude_sum == 5
    assert sorted(abs(w) for w in res.gate.weights) == [1, 1, 1, 2]
    assert res.gate.truth_table() == tt


def test_minimize_rejects_xor():
    with pytest.raises(NotThresholdError):
        minimize_weights(XOR2)


def test_minimize_deterministic():
    a = minimize_weights(MAJ3)
    b = minimize_weights(MAJ3)
    assert a == b


@pytest.mark.parametrize("n,expected", [(1, 4), (2, 14), (3, 104)])
def test_enumerate_counts(n, expected):
    enum = enumerate_threshold_functions(n)
    assert enum.count == expected
    oracle = threshold_tables_by_search(n, max(1, n - 1))
    assert set(enum.tables) == set(oracle)


def test_enumerate_matches_direct_solve_n2():
    enum = enumerate_threshold_functions(2)
    direct = {
        f
        for f in range(16)
        if isinstance(solve_threshold(TruthTable(2, f)), ThresholdRealization)
    }
    assert set(enum.tables) == direct


def test_solver_soundness_random_n5():
    rng = random.Random(31)
    for _ in range(20):
        tt = TruthTable(5, rng.randrange(1 << 32))
        res = solve_threshold(tt)
        if isinstance(res, ThresholdRealization):
            assert res.gate.truth_table() == tt
