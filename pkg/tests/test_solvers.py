import math
import random

import pytest

from detsched.evaluator import evaluate
from detsched.model import Instance, Sequence, SolverId
from detsched.solvers import (
    EnumOptions,
    TooLarge,
    heuristic_sequence1,
    heuristic_sequence2,
    solve_exact_bnb,
    solve_exact_enumeration,
    solve_heuristic,
    solve_ldr,
    solve_sdr,
)

from oracles import brute_force, straight_line_makespan


def inst(a0, alpha, t0, b):
    return Instance(n=len(b), a0=float(a0), alpha=float(alpha), t0=float(t0), b=tuple(map(float, b)))


def random_instance(rng, n):
    return inst(rng.uniform(0.5, 2.5), rng.uniform(0.01, 1), rng.uniform(0.5, 1.5),
                [rng.uniform(0, 6) for _ in range(n)])


ANY = dict(a0=1.5, alpha=0.6, t0=1.0)


@pytest.mark.parametrize(
    "b, expected",
    [([4.82, 2.98], (2, 1)), ([5.58, 4.10, 1.90], (3, 2, 1)), ([1, 1, 1], (1, 2, 3))],
)
def test_sdr_order(b, expected):
    out = solve_sdr(inst(b=b, **ANY))
    assert out.sequence.order == expected
    assert out.solver_id is SolverId.SDR
    assert out.wall_time >= 0


@pytest.mark.parametrize(
    "b, expected", [([4.82, 2.98], (1, 2)), ([1, 2, 3], (3, 2, 1)), ([2, 2], (1, 2))]
)
def test_ldr_order(b, expected):
    assert solve_ldr(inst(b=b, **ANY)).sequence.order == expected


def test_sequence1_examples():
    assert heuristic_sequence1(inst(1, 1, 1, [1, 2, 3])).order == (3, 2, 1)
    small = inst(0.2, 0.5, 1, [2, 1])
    assert heuristic_sequence1(small).order == (2, 1)
    _, best_order, _ = brute_force(0.2, 0.5, 1.0, (2.0, 1.0))
    assert best_order == (2, 1)
    assert heuristic_sequence1(inst(b=[3.3], **ANY)).order == (1,)


def test_sequence2_examples():
    three = inst(1, 1, 1, [1, 2, 3])
    assert heuristic_sequence2(three).order == (2, 3, 1)
    assert straight_line_makespan(1, 1, 1, (1, 2, 3), (2, 3, 1)) == [4.0, 17.0, 35.0]
    assert heuristic_sequence2(inst(0.2, 0.5, 1, [2, 1])).order == (2, 1)
    assert heuristic_sequence2(inst(b=[3.3], **ANY)).order == (1,)
    # duplicate maxima: second element of the descending, index-ascending order
    tie = inst(1, 1, 1, [5, 5])
    assert heuristic_sequence2(tie).order == (2, 1)
    assert solve_heuristic(tie).sequence.order == (1, 2)


def test_sequence2_variant_flag():
    # a0 = 0.2 < threshold 1.0 at r = 1 -> SDR branch
    i = inst(0.2, 0.5, 1, [2, 1, 3])
    assert heuristic_sequence2(i).order[0] == 2
    assert heuristic_sequence2(i, second_smallest_variant=True).order[0] == 1


def test_heuristic_examples():
    out = solve_heuristic(inst(1, 1, 1, [1, 2, 3]))
    assert out.sequence.order == (3, 2, 1)
    assert out.makespan == 33.0
    assert brute_force(1, 1, 1, (1, 2, 3))[0] == 33.0
    out = solve_heuristic(inst(0.2, 0.5, 1, [2, 1]))
    assert out.makespan == 4.5
    assert brute_force(0.2, 0.5, 1, (2, 1))[0] == 4.5
    same = inst(b=[2.5] * 5, **ANY)
    mk = solve_heuristic(same).makespan
    assert mk == pytest.approx(evaluate(same, Sequence((5, 3, 1, 2, 4))).makespan, rel=1e-12)


def test_sequence2_degenerates_in_sdr_branch():
    rng = random.Random(21)
    checked = 0
    for _ in range(500):
        i = random_instance(rng, rng.randint(2, 8))
        # SDR branch at r = 1 iff a0 < t0 (1 - alpha) / alpha
        if i.a0 < i.t0 * (1 - i.alpha) / i.alpha:
            assert heuristic_sequence1(i) == heuristic_sequence2(i)
            checked += 1
    assert checked > 50


def test_enumeration_examples():
    out = solve_exact_enumeration(inst(2, 0.5, 1, [2, 1]))
    assert out.sequence.order == (1, 2) and out.makespan == 8.5
    out = solve_exact_enumeration(inst(1, 1, 1, [1, 2, 3]))
    assert out.sequence.order == (3, 2, 1) and out.makespan == 33.0
    assert out.evaluated == 6
    one = inst(1.7, 0.4, 0.8, [2.5])
    out = solve_exact_enumeration(one)
    assert out.sequence.order == (1,)
    assert out.makespan == pytest.approx(0.8 + 1.7 + 2.5 * 0.8)


def test_enumeration_matches_brute_force_oracle():
    rng = random.Random(4)
    for _ in range(80):
        i = random_instance(rng, rng.randint(1, 7))
        best, best_order, _ = brute_force(i.a0, i.alpha, i.t0, i.b)
        out = solve_exact_enumeration(i)
        assert out.makespan == pytest.approx(best, rel=1e-12)
        assert out.evaluated == math.factorial(i.n)


def test_enumeration_tie_break_is_lexicographic():
    # identical jobs: every order ties
    out = solve_exact_enumeration(inst(b=[1.0] * 5, **ANY))
    assert out.sequence.order == (1, 2, 3, 4, 5)
    out = solve_exact_enumeration(inst(b=[0.0] * 9, **ANY))
    assert out.sequence.order == tuple(range(1, 10))


def test_enumeration_guard():
    big = inst(b=[1.0] * 14, **ANY)
    with pytest.raises(TooLarge):
        solve_exact_enumeration(big)
    with pytest.raises(TooLarge):
        solve_exact_enumeration(inst(b=[1.0] * 6, **ANY), EnumOptions(guard=5))


def test_enumeration_workers_do_not_change_result():
    rng = random.Random(17)
    for n in (2, 4, 6, 9):
        i = random_instance(rng, n)
        one = solve_exact_enumeration(i, EnumOptions(workers=1))
        many = solve_exact_enumeration(i, EnumOptions(workers=3))
        assert one.sequence == many.sequence
        assert one.makespan == many.makespan
        assert one.evaluated == many.evaluated


def test_enumeration_bit_matches_evaluate():
    rng = random.Random(2)
    for _ in range(30):
        i = random_instance(rng, rng.randint(2, 10))
        out = solve_exact_enumeration(i)
        assert out.makespan == evaluate(i, out.sequence).makespan


def test_bnb_examples():
    zero = inst(1.3, 0.7, 0.9, [0.0] * 6)
    out = solve_exact_bnb(zero)
    assert out.makespan == pytest.approx(0.9 + 1.3 * sum(0.7 ** k for k in range(6)), rel=1e-12)
    one = inst(1.7, 0.4, 0.8, [2.5])
    assert solve_exact_bnb(one).schedule == solve_exact_enumeration(one).schedule


def test_bnb_with_incumbent():
    rng = random.Random(5)
    for _ in range(30):
        i = random_instance(rng, rng.randint(2, 7))
        seeded = solve_exact_bnb(i, incumbent=solve_heuristic(i).sequence)
        assert seeded.makespan == solve_exact_enumeration(i).makespan


def test_alpha_one_ldr_is_optimal():
    rng = random.Random(13)
    for _ in range(60):
        i = random_instance(rng, rng.randint(1, 7))
        i = Instance(i.n, i.a0, 1.0, i.t0, i.b)
        assert solve_ldr(i).makespan == pytest.approx(solve_exact_enumeration(i).makespan, rel=1e-12)


def test_solvers_are_deterministic():
    rng = random.Random(23)
    for _ in range(20):
        i = random_instance(rng, rng.randint(1, 8))
        for solve in (solve_sdr, solve_ldr, solve_heuristic, solve_exact_bnb, solve_exact_enumeration):
            a, b = solve(i), solve(i)
            assert a.schedule == b.schedule
