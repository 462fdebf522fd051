"""Exact rational LP solver (two-phase revised simplex).

Everything is kept in exact rationals, so optima and optimal bases are
certificates rather than approximations.  Columns are sparse (row, value)
lists; the basis inverse is dense.  Pricing is Dantzig's rule with float
screening (floats only rank candidates; every decision is re-verified
exactly).  A run of degenerate pivots switches the ratio test to a
lexicographic perturbation seeded at the current basis, which breaks the
stall and guarantees termination from any starting basis.  Callers may
hand in a feasible basis to skip phase 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rationals import Q, QZERO

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

# degenerate pivots tolerated before the lexicographic ratio test engages;
# engaging immediately measures fastest on the LP families here
_DEGENERATE_STREAK = 0


class SimplexError(RuntimeError):
    pass


@dataclass
class LPSolution:
    status: str
    objective: object | None = None
    x: list | None = None
    duals: list | None = None
    basis: tuple[int, ...] | None = None
    pivots: int = 0


def _identity(m):
    return [[Q(1) if i == j else QZERO for j in range(m)] for i in range(m)]


def _invert(columns, basis, m):
    """Exact inverse of the m x m basis matrix, or None when singular."""

    a = [[QZERO] * m for _ in range(m)]
    for j, col_idx in enumerate(basis):
        for r, v in columns[col_idx]:
            a[r][j] = v
    inv = _identity(m)
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = 1 / a[col][col]
        a[col] = [x * scale for x in a[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


class _Core:
    """Primal simplex over an explicit basis inverse."""

    def __init__(self, columns, cost, b, m):
        self.columns = columns
        self.cost = cost
        self.b = b
        self.m = m
        self.basis = []
        self.binv = []
        self.xb = []
        self.in_basis = [False] * len(columns)
        self.allowed = [True] * len(columns)
        self.blocked = None  # numpy mask mirroring in_basis/allowed
        self.lex_t = None  # perturbation state, only during degenerate stalls
        self.pivots = 0

    def set_basis(self, basis):
        if len(basis) != self.m or len(set(basis)) != self.m:
            return False
        binv = _invert(self.columns, basis, self.m)
        if binv is None:
            return False
        xb = [
            sum((row[r] * self.b[r] for r in range(self.m)), QZERO)
            for row in binv
        ]
        if any(v < 0 for v in xb):
            return False
        self.basis = list(basis)
        self.binv = binv
        self.xb = xb
        self.in_basis = [False] * len(self.columns)
        for j in basis:
            self.in_basis[j] = True
        return True

    def duals(self):
        y = [QZERO] * self.m
        for i, j in enumerate(self.basis):
            cb = self.cost[j]
            if cb != 0:
                row = self.binv[i]
                for r in range(self.m):
                    if row[r] != 0:
                        y[r] = y[r] + cb * row[r]
        return y

    def reduced_cost(self, j, y):
        rc = self.cost[j]
        for r, v in self.columns[j]:
            if y[r] != 0:
                rc = rc - y[r] * v
        return rc

    def objective(self):
        return sum(
            (self.cost[j] * self.xb[i] for i, j in enumerate(self.basis)),
            QZERO,
        )

    def _refresh_float(self):
        """Float image of the column matrix, used only to rank candidates."""

        ncols = len(self.columns)
        f = np.zeros((self.m, ncols))
        for j, col in enumerate(self.columns):
            for r, v in col:
                f[r, j] = float(v)
        self.float_cols = f
        self.float_cost = np.array([float(c) for c in self.cost])
        self.blocked = np.fromiter(
            (self.in_basis[j] or not self.allowed[j] for j in range(ncols)),
            dtype=bool,
            count=ncols,
        )

    def _exact_first_negative(self, y):
        for j in range(len(self.columns)):
            if self.in_basis[j] or not self.allowed[j]:
                continue
            if self.reduced_cost(j, y) < 0:
                return j
        return -1

    def _float_screened_entering(self, y):
        """Most negative reduced cost by float ranking, decided exactly.

        Floats only order the candidates; every selection is confirmed with
        an exact reduced cost, and a full exact sweep settles the borderline
        and no-candidate cases, so optimality claims never rest on floats.
        """

        yf = np.array([float(v) for v in y])
        rc = self.float_cost - yf @ self.float_cols
        rc[self.blocked] = np.inf
        for _ in range(12):
            j = int(np.argmin(rc))
            if not np.isfinite(rc[j]) or rc[j] >= -1e-7:
                break
            if self.reduced_cost(j, y) < 0:
                return j
            rc[j] = np.inf
        return self._exact_first_negative(y)

    def _choose_leaving(self, d):
        """Minimum-ratio row; Bland-style tie-break outside lex mode.

        In lex mode the perturbed right-hand side b + B_seed (eps^1..eps^m)
        makes the problem nondegenerate: ties on x_B/d are resolved by
        lexicographic comparison of the rows of T/d where T = B^-1 B_seed,
        and the winner is unique because T is nonsingular.
        """

        leave = -1
        theta = None
        if self.lex_t is None:
            for i in range(self.m):
                if d[i] > 0:
                    ratio = self.xb[i] / d[i]
                    if (
                        theta is None
                        or ratio < theta
                        or (ratio == theta and self.basis[i] < self.basis[leave])
                    ):
                        theta = ratio
                        leave = i
            return leave, theta
        ties = []
        for i in range(self.m):
            if d[i] > 0:
                ratio = self.xb[i] / d[i]
                if theta is None or ratio < theta:
                    theta = ratio
                    ties = [i]
                elif ratio == theta:
                    ties.append(i)
        if theta is None:
            return -1, None
        for col in range(self.m):
            if len(ties) == 1:
                break
            best_val = None
            keep = []
            for i in ties:
                val = self.lex_t[i][col] / d[i]
                if best_val is None or val < best_val:
                    best_val = val
                    keep = [i]
                elif val == best_val:
                    keep.append(i)
            ties = keep
        return ties[0], theta

    def iterate(self, max_pivots=1000000):
        self._refresh_float()
        self.lex_t = None
        streak = 0
        last_obj = self.objective()
        while True:
            if self.pivots > max_pivots:
                raise SimplexError("pivot limit exceeded")
            y = self.duals()
            enter = self._float_screened_entering(y)
            if enter < 0:
                return OPTIMAL
            col = self.columns[enter]
            d = []
            for row in self.binv:
                acc = QZERO
                for r, v in col:
                    x = row[r]
                    if x:
                        acc = acc + x * v
                d.append(acc)
            leave, theta = self._choose_leaving(d)
            if leave < 0:
                return UNBOUNDED
            self._pivot(enter, leave, d, theta)
            obj = self.objective()
            if theta == 0:
                streak += 1
                if streak > _DEGENERATE_STREAK and self.lex_t is None:
                    self.lex_t = _identity(self.m)
            else:
                streak = 0
            if self.lex_t is not None and obj < last_obj:
                self.lex_t = None
                streak = 0
            last_obj = obj

    def _pivot(self, enter, leave, d, theta):
        self.pivots += 1
        piv = d[leave]
        prow = [x / piv if x else x for x in self.binv[leave]]
        self.binv[leave] = prow
        for i in range(self.m):
            if i != leave and d[i] != 0:
                f = d[i]
                row = self.binv[i]
                self.binv[i] = [
                    x - f * y if y else x for x, y in zip(row, prow)
                ]
        if self.lex_t is not None:
            trow = [x / piv if x else x for x in self.lex_t[leave]]
            self.lex_t[leave] = trow
            for i in range(self.m):
                if i != leave and d[i] != 0:
                    f = d[i]
                    row = self.lex_t[i]
                    self.lex_t[i] = [
                        x - f * y if y else x for x, y in zip(row, trow)
                    ]
        if theta != 0:
            for i in range(self.m):
                if i != leave and d[i] != 0:
                    self.xb[i] = self.xb[i] - d[i] * theta
        self.xb[leave] = theta
        old = self.basis[leave]
        self.in_basis[old] = False
        self.in_basis[enter] = True
        if self.blocked is not None:
            self.blocked[old] = not self.allowed[old]
            self.blocked[enter] = True
        self.basis[leave] = enter


def solve_standard(columns, cost, b, m, start_basis=None):
    """min cost.x subject to A x = b, x >= 0, with sparse columns of A.

    b may have either sign (rows are normalised internally).  When
    start_basis yields an invertible, primal-feasible basis, phase 1 is
    skipped.  The returned solution carries exact x, duals and basis, and
    optimality is re-verified by exact complementary slackness.
    """

    columns = [sorted(col) for col in columns]
    cost = [QZERO + c for c in cost]
    b = [QZERO + v for v in b]
    flip = [v < 0 for v in b]
    if any(flip):
        b = [-v if f else v for v, f in zip(b, flip)]
        columns = [
            [(r, -v if flip[r] else v) for r, v in col] for col in columns
        ]
    nstruct = len(columns)
    core = _Core(list(columns), list(cost), b, m)

    started = False
    if start_basis is not None:
        started = core.set_basis(list(start_basis))
    if not started:
        art = list(range(nstruct, nstruct + m))
        for i in range(m):
            core.columns.append([(i, Q(1))])
            core.cost.append(QZERO)
        core.in_basis = [False] * len(core.columns)
        core.allowed = [True] * len(core.columns)
        phase1_cost = [QZERO] * nstruct + [Q(1)] * m
        core.cost = phase1_cost
        if not core.set_basis(art):
            raise SimplexError("artificial basis rejected")
        status = core.iterate()
        if status != OPTIMAL or core.objective() != 0:
            return LPSolution(status=INFEASIBLE, pivots=core.pivots)
        _drive_out_artificials(core, nstruct)
        if any(j >= nstruct for j in core.basis):
            core2, _ = _drop_redundant_rows(core, nstruct)
            if core2 is None:
                raise SimplexError("could not remove redundant rows")
            core = core2
        core.cost = list(cost) + [QZERO] * (len(core.columns) - nstruct)
        for j in range(nstruct, len(core.columns)):
            core.allowed[j] = False

    status = core.iterate()
    if status == UNBOUNDED:
        return LPSolution(status=UNBOUNDED, pivots=core.pivots)
    x = [QZERO] * nstruct
    for i, j in enumerate(core.basis):
        if j < nstruct:
            x[j] = core.xb[i]
    y = core.duals()
    obj = core.objective()
    _verify_optimal(core, nstruct, x, y, obj)
    # duals in the caller's row order and sign convention (unavailable when
    # redundant rows were eliminated)
    duals = None
    if core.m == m:
        duals = [-v if f else v for v, f in zip(y, flip)]
    return LPSolution(
        status=OPTIMAL,
        objective=obj,
        x=x,
        duals=duals,
        basis=tuple(core.basis),
        pivots=core.pivots,
    )


def _drive_out_artificials(core, nstruct):
    """Pivot zero-valued artificial variables out of the basis when possible."""

    for i in range(core.m):
        if core.basis[i] < nstruct:
            continue
        for j in range(nstruct):
            if core.in_basis[j]:
                continue
            entry = sum(
                (core.binv[i][r] * v for r, v in core.columns[j]), QZERO
            )
            if entry != 0:
                d = [
                    sum((row[r] * v for r, v in core.columns[j]), QZERO)
                    for row in core.binv
                ]
                core._pivot(j, i, d, core.xb[i] / d[i])
                break


def _drop_redundant_rows(core, nstruct):
    """Remove rows whose artificials cannot leave the basis (dependent rows)."""

    bad_rows = sorted(i for i in range(core.m) if core.basis[i] >= nstruct)
    if any(core.xb[i] != 0 for i in bad_rows):
        return None, None
    keep = [r for r in range(core.m) if r not in bad_rows]
    remap = {r: k for k, r in enumerate(keep)}
    new_cols = [
        [(remap[r], v) for r, v in core.columns[j] if r in remap]
        for j in range(nstruct)
    ]
    new_b = [core.b[r] for r in keep]
    m2 = len(keep)
    new_core = _Core(new_cols, core.cost[:nstruct], new_b, m2)
    basis = [core.basis[i] for i in range(core.m) if i not in bad_rows]
    if not new_core.set_basis(basis):
        return None, None
    new_core.pivots = core.pivots
    return new_core, bad_rows


def _verify_optimal(core, nstruct, x, y, obj):
    """Exact optimality audit: primal feasibility plus strong duality.

    Dual feasibility (all reduced costs nonnegative) is exactly the
    condition that terminated the final pricing pass.
    """

    ax = [QZERO] * core.m
    for j in range(nstruct):
        if x[j] != 0:
            for r, v in core.columns[j]:
                ax[r] = ax[r] + x[j] * v
    if ax != list(core.b):
        raise SimplexError("optimal solution fails the equality rows")
    if any(v < 0 for v in x):
        raise SimplexError("optimal solution is not nonnegative")
    ydotb = sum((y[r] * core.b[r] for r in range(core.m)), QZERO)
    if obj != ydotb:
        raise SimplexError("strong duality check failed")


# ---------------------------------------------------------------------------
# convenience model builder


class RationalLP:
    """Small exact-LP model builder over nonnegative variables.

    Rows are built with add_eq/add_le/add_ge; free quantities are expressed
    by the caller as differences of nonnegative variables.  solve() hands
    the standard form to the revised simplex and maps the objective back;
    duals stay in the internal minimisation convention.
    """

    def __init__(self, maximize=False):
        self.maximize = maximize
        self.obj = []
        self.rows = []  # (coeffs dict, rel, rhs)

    def variable(self, obj=0):
        self.obj.append(QZERO + obj)
        return len(self.obj) - 1

    def add_eq(self, coeffs, rhs):
        self.rows.append((dict(coeffs), "=", rhs))
        return len(self.rows) - 1

    def add_le(self, coeffs, rhs):
        self.rows.append((dict(coeffs), "<=", rhs))
        return len(self.rows) - 1

    def add_ge(self, coeffs, rhs):
        self.rows.append((dict(coeffs), ">=", rhs))
        return len(self.rows) - 1

    def slack_index(self, row_id):
        """Standard-form column index of the slack/surplus of a <=/>= row."""

        idx = len(self.obj)
        for r in range(row_id):
            if self.rows[r][1] != "=":
                idx += 1
        if self.rows[row_id][1] == "=":
            raise ValueError("equality rows have no slack")
        return idx

    def solve(self, start_basis=None) -> LPSolution:
        nvars = len(self.obj)
        m = len(self.rows)
        cols = [[] for _ in range(nvars)]
        cost = [(-c if self.maximize else c) for c in self.obj]
        b = []
        for r, (coeffs, _, rhs) in enumerate(self.rows):
            b.append(QZERO + rhs)
            for j, v in coeffs.items():
                v = QZERO + v
                if v != 0:
                    cols[j].append((r, v))
        for r, (_, rel, _) in enumerate(self.rows):
            if rel == "<=":
                cols.append([(r, Q(1))])
                cost.append(QZERO)
            elif rel == ">=":
                cols.append([(r, Q(-1))])
                cost.append(QZERO)
        sol = solve_standard(cols, cost, b, m, start_basis=start_basis)
        if sol.status == OPTIMAL and self.maximize:
            sol.objective = -sol.objective
        return sol
