"""Brute-force enumeration layer.

The DFS enumerator and the counting dynamic program are independent
implementations of the same set; they are played against each other on
random instances, and the witness search is pinned to known empty and
known nonempty parameter combinations.
"""

import random

import pytest

from inertia.conditions import AicParams, BdcParams, CondExpr, RicParams, bdc_member
from inertia.oracle import (
    GridConfig,
    HorizonError,
    enumerate_solutions,
    find_empty_witness,
    free_tick_count,
    iter_solutions,
    set_equal,
    set_subset,
    solution_count,
)
from inertia.signals import Signal

U = Signal(0, (0, 5))
P = BdcParams(1, 3, 1, 3)
GRID = GridConfig(-4, 12)


def test_grid_validation():
    with pytest.raises(HorizonError):
        GridConfig(5, 5)
    with pytest.raises(HorizonError):
        GridConfig(0, 200)
    with pytest.raises(HorizonError):
        GridConfig(0, 10, -1)


def test_enumeration_example():
    sols = enumerate_solutions(U, CondExpr((P,)), GRID)
    assert len(sols) == 4
    assert Signal(0, (3, 7)) in sols
    assert Signal(0, (2, 8)) in sols
    assert all(bdc_member(U, x, P) for x in sols)


def test_solution_count_matches_enumeration_example():
    assert solution_count(U, CondExpr((P,)), GRID) == 4
    assert free_tick_count(U, CondExpr((P,)), GRID) == 2


def test_switches_stay_inside_the_grid():
    for x in iter_solutions(U, CondExpr((P,)), GRID):
        assert all(GRID.lo < t <= GRID.hi for t in x.switches)


def test_max_switches_cap():
    assert solution_count(U, CondExpr((P,)), GridConfig(-4, 12, 0)) == 0
    assert solution_count(U, CondExpr((P,)), GridConfig(-4, 12, 2)) == 4


def test_deterministic_parameters_give_a_singleton():
    p = BdcParams(0, 2, 0, 2)
    sols = enumerate_solutions(U, CondExpr((p,)), GRID)
    assert sols == [U.translate(2)]


def test_deterministic_licensing_gives_a_singleton():
    p = BdcParams(1, 2, 1, 2)
    r = RicParams(1, 2, 1, 2)
    sols = enumerate_solutions(Signal(0, (0, 3)), CondExpr((p, r)), GridConfig(-3, 15))
    assert len(sols) == 1


def test_count_agrees_with_dfs_on_random_instances():
    rng = random.Random(20240217)
    for _ in range(60):
        dr = rng.randint(0, 4)
        df = rng.randint(0, 4)
        p = BdcParams(rng.randint(0, dr), dr, rng.randint(0, df), df)
        k = rng.randint(0, 4)
        u = Signal(rng.randint(0, 1), tuple(sorted(rng.sample(range(0, 9), k))))
        atoms = [p]
        if rng.random() < 0.4:
            atoms.append(AicParams(rng.randint(0, 2), rng.randint(0, 2)))
        cap = rng.choice([None, None, 2, 4])
        grid = GridConfig(-3, 13, cap)
        expr = CondExpr(tuple(atoms))
        sols = enumerate_solutions(u, expr, grid)
        assert solution_count(u, expr, grid) == len(sols)
        assert len(set(sols)) == len(sols)


def test_witness_found_for_inconsistent_windows():
    w = find_empty_witness(CondExpr((BdcParams(0, 3, 0, 2),)), GridConfig(-2, 14), 4)
    assert w is not None
    assert solution_count(w, CondExpr((BdcParams(0, 3, 0, 2),)), GridConfig(-2, 14)) == 0


def test_no_witness_for_consistent_windows():
    assert find_empty_witness(CondExpr((BdcParams(1, 2, 1, 2),)), GridConfig(-2, 14), 4) is None


def test_witness_found_when_holds_exceed_memories():
    expr = CondExpr((BdcParams(1, 2, 1, 2), AicParams(2, 1)))
    w = find_empty_witness(expr, GridConfig(-2, 20), 4)
    assert w is not None
    assert solution_count(w, expr, GridConfig(-2, 20)) == 0


def test_witness_at_the_hold_boundary_needs_a_pulse_train():
    # one forcing pulse is never enough here; emptiness only shows up on a
    # train of minimal pulses that walks the output across its slack
    expr = CondExpr((BdcParams(0, 1, 4, 4), AicParams(2, 3)))
    grid = GridConfig(-2, 58)
    w = find_empty_witness(expr, grid, 6)
    assert w == Signal(0, (0, 1, 6, 7, 12))
    assert solution_count(w, expr, grid) == 0


def test_set_helpers():
    a = [Signal(0, (0,)), Signal(1, ())]
    b = [Signal(1, ()), Signal(0, (0,))]
    assert set_equal(a, b)
    assert set_subset([Signal(1, ())], a)
    assert not set_subset(a, [Signal(1, ())])
