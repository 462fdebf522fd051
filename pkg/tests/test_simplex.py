"""Exact rational simplex: statuses, certificates, degenerate cases."""

import random

from spectral_lb.rationals import Q
from spectral_lb.simplex import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    RationalLP,
    solve_standard,
)


def test_simple_min():
    # min x + y subject to x + y >= 1
    lp = RationalLP()
    x = lp.variable(obj=1)
    y = lp.variable(obj=1)
    lp.add_ge({x: Q(1), y: Q(1)}, 1)
    sol = lp.solve()
    assert sol.status == OPTIMAL
    assert sol.objective == Q(1)


def test_simple_max():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6: optimum 12 at (4, 0)
    lp = RationalLP(maximize=True)
    x = lp.variable(obj=3)
    y = lp.variable(obj=2)
    lp.add_le({x: Q(1), y: Q(1)}, 4)
    lp.add_le({x: Q(1), y: Q(3)}, 6)
    sol = lp.solve()
    assert sol.status == OPTIMAL
    assert sol.objective == Q(12)
    assert sol.x[x] == Q(4) and sol.x[y] == Q(0)


def test_exact_rational_optimum():
    # min x subject to 3x = 1 gives exactly 1/3
    lp = RationalLP()
    x = lp.variable(obj=1)
    lp.add_eq({x: Q(3)}, 1)
    sol = lp.solve()
    assert sol.objective == Q(1, 3)


def test_infeasible():
    lp = RationalLP()
    x = lp.variable(obj=1)
    lp.add_eq({x: Q(1)}, 1)
    lp.add_eq({x: Q(1)}, 2)
    assert lp.solve().status == INFEASIBLE


def test_unbounded():
    lp = RationalLP(maximize=True)
    x = lp.variable(obj=1)
    lp.add_ge({x: Q(1)}, 1)
    assert lp.solve().status == UNBOUNDED


def test_negative_rhs_normalised():
    # x - y = -2, minimise x + y -> x=0, y=2
    lp = RationalLP()
    x = lp.variable(obj=1)
    y = lp.variable(obj=1)
    lp.add_eq({x: Q(1), y: Q(-1)}, -2)
    sol = lp.solve()
    assert sol.status == OPTIMAL and sol.objective == Q(2)


def test_redundant_rows_handled():
    lp = RationalLP()
    x = lp.variable(obj=1)
    y = lp.variable(obj=2)
    lp.add_eq({x: Q(1), y: Q(1)}, 2)
    lp.add_eq({x: Q(2), y: Q(2)}, 4)  # same hyperplane
    sol = lp.solve()
    assert sol.status == OPTIMAL and sol.objective == Q(2)


def test_degenerate_cycling_guard():
    # classic Beale-style degeneracy; must terminate at the optimum
    lp = RationalLP()
    x1 = lp.variable(obj=Q(-3, 4))
    x2 = lp.variable(obj=150)
    x3 = lp.variable(obj=Q(-1, 50))
    x4 = lp.variable(obj=6)
    lp.add_le({x1: Q(1, 4), x2: Q(-60), x3: Q(-1, 25), x4: Q(9)}, 0)
    lp.add_le({x1: Q(1, 2), x2: Q(-90), x3: Q(-1, 50), x4: Q(3)}, 0)
    lp.add_le({x3: Q(1)}, 1)
    sol = lp.solve()
    assert sol.status == OPTIMAL
    assert sol.objective == Q(-1, 20)


def test_duals_satisfy_strong_duality(rng=random.Random(7)):
    for _ in range(20):
        nv, nr = rng.randint(1, 5), rng.randint(1, 4)
        lp = RationalLP()
        xs = [lp.variable(obj=Q(rng.randint(0, 4))) for _ in range(nv)]
        for _ in range(nr):
            coeffs = {x: Q(rng.randint(0, 3)) for x in xs}
            if all(v == 0 for v in coeffs.values()):
                coeffs[xs[0]] = Q(1)
            lp.add_ge(coeffs, rng.randint(0, 5))
        sol = lp.solve()
        if sol.status != OPTIMAL:
            continue
        assert sol.duals is not None
        rhs = [row[2] for row in lp.rows]
        assert sol.objective == sum(
            (d * Q(b) for d, b in zip(sol.duals, rhs)), Q(0)
        )


def test_warm_start_basis():
    # x + y = 2 with start basis {x}; one pivot territory
    cols = [[(0, Q(1))], [(0, Q(1))]]
    sol = solve_standard(cols, [Q(1), Q(2)], [Q(2)], 1, start_basis=[0])
    assert sol.status == OPTIMAL and sol.objective == Q(2) and sol.x[0] == Q(2)


def test_warm_start_invalid_falls_back():
    # the proposed basis is singular; solver must still find the optimum
    cols = [[(0, Q(1))], [(0, Q(2))]]
    sol = solve_standard(cols, [Q(1), Q(1)], [Q(2)], 1, start_basis=[0, 1])
    assert sol.status == OPTIMAL


def test_pivot_limit_guard():
    lp = RationalLP()
    x = lp.variable(obj=1)
    lp.add_ge({x: Q(1)}, 1)
    sol = lp.solve()
    assert sol.pivots < 50
