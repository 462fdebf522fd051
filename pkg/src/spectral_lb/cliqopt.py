"""Clique enumeration and the exact LP optimisation of decomposition bounds.

lambda_star_K optimises over clique partitions of integer multiples of a
simple graph; lambda_star_C optimises over signed complete-graph
decompositions.  Both are exact rational linear programs whose optima are
returned with integer certificates that re-validate against the decomp
module.  The combinatorial side (independence, clique and chromatic
numbers, Turan numbers) is exact branch and bound on bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .decomp import (
    CliquePartition,
    CompleteDecomposition,
    clique_partition_bound,
    clique_partition_stats,
    complete_decomposition_bound,
    complete_piece,
)
from .graphs import SimpleGraph, as_weighted, scale
from .rationals import Q, QZERO, denominator_lcm
from .simplex import OPTIMAL, RationalLP, SimplexError

MAX_CLIQUE_ORDER = 24
MAX_COMPLETE_ORDER = 12
MAX_COLOR_ORDER = 18


# ---------------------------------------------------------------------------
# clique enumeration


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: SimpleGraph) -> list[int]:
    """Bitmasks of all maximal cliques (Bron-Kerbosch with pivoting)."""

    out = []
    rows = g.rows

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot = max(_bits(pool), key=lambda v: (p & rows[v]).bit_count())
        for v in _bits(p & ~rows[pivot]):
            bit = 1 << v
            bk(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    bk(0, (1 << g.n) - 1 if g.n else 0, 0)
    return out


def enumerate_cliques(g: SimpleGraph, min_size: int = 2) -> list[tuple[int, ...]]:
    """All cliques of size >= min_size, as sorted vertex tuples."""

    if g.n > MAX_CLIQUE_ORDER:
        raise ValueError(f"clique enumeration capped at n <= {MAX_CLIQUE_ORDER}")
    seen = set()
    for mask in maximal_cliques(g):
        members = tuple(_bits(mask))
        for size in range(min_size, len(members) + 1):
            for sub in combinations(members, size):
                seen.add(sub)
    return sorted(seen, key=lambda s: (len(s), s))


# ---------------------------------------------------------------------------
# exact combinatorial numbers


def clique_number(g: SimpleGraph) -> int:
    """Order of the largest clique, by branch and bound with colour bounds."""

    if g.n > MAX_CLIQUE_ORDER:
        raise ValueError(f"clique number capped at n <= {MAX_CLIQUE_ORDER}")
    if g.n == 0:
        return 0
    rows = g.rows
    best = 0

    def colour_bound(p: int) -> int:
        colours = []
        for v in _bits(p):
            for cls in colours:
                if not (rows[v] & cls[0]):
                    cls[0] |= 1 << v
                    break
            else:
                colours.append([1 << v])
        return len(colours)

    def expand(r_size: int, p: int):
        nonlocal best
        if not p:
            best = max(best, r_size)
            return
        if r_size + colour_bound(p) <= best:
            return
        v = max(_bits(p))
        expand(r_size + 1, p & rows[v])
        expand(r_size, p & ~(1 << v))

    expand(0, (1 << g.n) - 1)
    return best


def independence_number(g: SimpleGraph) -> int:
    return clique_number(g.complement())


def chromatic_number(g: SimpleGraph) -> int:
    """Exact chromatic number via DSATUR branch and bound."""

    if g.n > MAX_COLOR_ORDER:
        raise ValueError(f"chromatic number capped at n <= {MAX_COLOR_ORDER}")
    n = g.n
    if n == 0:
        return 0
    rows = g.rows
    colour = [-1] * n
    best = n + 1

    def greedy_upper() -> int:
        order = sorted(range(n), key=lambda u: -rows[u].bit_count())
        cols = {}
        for u in order:
            used = {cols[v] for v in _bits(rows[u]) if v in cols}
            c = 0
            while c in used:
                c += 1
            cols[u] = c
        return 1 + max(cols.values()) if cols else 0

    best = greedy_upper() + 1

    def solve(assigned: int, used: int):
        nonlocal best
        if used >= best:
            return
        if assigned == n:
            best = used
            return
        # most saturated uncoloured vertex, ties by degree
        cand, sat_best = -1, (-1, -1)
        for u in range(n):
            if colour[u] >= 0:
                continue
            sat = len({colour[v] for v in _bits(rows[u]) if colour[v] >= 0})
            key = (sat, rows[u].bit_count())
            if key > sat_best:
                sat_best = key
                cand = u
        forbidden = {colour[v] for v in _bits(rows[cand]) if colour[v] >= 0}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colour[cand] = c
            solve(assigned + 1, max(used, c + 1))
            colour[cand] = -1

    solve(0, 0)
    return best


def turan_t(d: int, k: int) -> int:
    """Edges of the Turan graph: balanced (k-1)-clique partition of d vertices."""

    if not d >= k >= 3:
        raise ValueError("turan_t requires d >= k >= 3")
    q, r = divmod(d, k - 1)
    return r * comb(q + 1, 2) + (k - 1 - r) * comb(q, 2)


# ---------------------------------------------------------------------------
# fractional chromatic number


def fractional_chromatic(g: SimpleGraph):
    """Exact LP optimum of the independent-set cover relaxation."""

    if g.n > MAX_COLOR_ORDER:
        raise ValueError(f"fractional chromatic capped at n <= {MAX_COLOR_ORDER}")
    if g.n == 0:
        return QZERO
    ind_sets = maximal_cliques(g.complement())
    lp = RationalLP()
    xs = [lp.variable(obj=1) for _ in ind_sets]
    for u in range(g.n):
        lp.add_ge({xs[j]: Q(1) for j, s in enumerate(ind_sets) if s >> u & 1}, 1)
    sol = lp.solve()
    if sol.status != OPTIMAL:
        raise SimplexError(f"fractional chromatic LP came back {sol.status}")
    return sol.objective


# ---------------------------------------------------------------------------
# lambda*_K: clique partitions of mu G


@dataclass(frozen=True)
class LambdaStarResult:
    """Exact LP optimum with its integer decomposition certificate."""

    value: object
    mu: int
    multiplicities: dict
    per_vertex: tuple
    pivots: int = 0


def lambda_star_K(g: SimpleGraph) -> LambdaStarResult:
    """Best clique-partition bound -r(K)/mu over all mu and partitions.

    Solves min t subject to: every edge exactly covered (weight 1), every
    per-vertex clique load at most t.  The optimal basic solution is scaled
    by the lcm of its denominators into a genuine clique partition of mu G,
    which is re-validated exactly.
    """

    if g.n > MAX_CLIQUE_ORDER:
        raise ValueError(f"lambda*_K capped at n <= {MAX_CLIQUE_ORDER}")
    edges = g.edges()
    if not edges:
        raise ValueError("lambda*_K needs at least one edge")
    cliques = enumerate_cliques(g, 2)
    csets = [frozenset(c) for c in cliques]
    by_edge = {e: [] for e in edges}
    by_vertex = [[] for _ in range(g.n)]
    for j, cs in enumerate(csets):
        for u in cliques[j]:
            by_vertex[u].append(j)
        for a, b in combinations(cliques[j], 2):
            by_edge[(a, b)].append(j)

    lp = RationalLP()
    z = [lp.variable() for _ in cliques]
    t = lp.variable(obj=1)
    edge_rows = [lp.add_eq({z[j]: Q(1) for j in by_edge[e]}, 1) for e in edges]
    vertex_rows = [
        lp.add_le({**{z[j]: Q(1) for j in by_vertex[u]}, t: Q(-1)}, 0)
        for u in range(g.n)
    ]

    # phase-1-free start: one 2-clique per edge, t at the maximum degree
    edge_clique = {e: cliques.index(e) for e in edges}
    degs = g.degrees()
    u_star = max(range(g.n), key=lambda u: degs[u])
    basis = [z[edge_clique[e]] for e in edges]
    basis.append(t)
    basis.extend(lp.slack_index(vertex_rows[u]) for u in range(g.n) if u != u_star)
    sol = lp.solve(start_basis=basis)
    if sol.status != OPTIMAL:
        raise SimplexError(f"lambda*_K LP came back {sol.status}")

    zvals = [sol.x[z[j]] for j in range(len(cliques))]
    mu = denominator_lcm(zvals)
    mult = {}
    for j, v in enumerate(zvals):
        if v != 0:
            count = v * mu
            assert count.denominator == 1
            mult[cliques[j]] = int(count)
    partition = CliquePartition(
        mu, tuple(c for c, k in sorted(mult.items()) for _ in range(k))
    )
    r_u, r, _ = clique_partition_stats(partition, g)
    value = -sol.objective
    if clique_partition_bound(partition, g) != value or Q(-r, mu) != value:
        raise SimplexError("lambda*_K certificate failed to re-validate")
    return LambdaStarResult(value, mu, mult, tuple(r_u), sol.pivots)


# ---------------------------------------------------------------------------
# lambda*_C: signed complete graph decompositions


def _complete_column_shapes(n: int):
    """(kind, subset) for every complete graph on a subset of 0..n-1."""

    shapes = []
    verts = range(n)
    for size in range(1, n + 1):
        for s in combinations(verts, size):
            if size >= 2:
                shapes.append(("K", s))
            shapes.append(("J", s))
    return shapes


def _piece_lambda_coeffs(kind: str, size: int):
    """(lambda of +1 piece, lambda of -1 piece) for the vertex rows."""

    if kind == "K":
        return Q(-1), Q(-(size - 1))
    if size == 1:
        return Q(1), Q(-1)
    return QZERO, Q(-size)


def lambda_star_C(h) -> LambdaStarResult:
    """Best complete-graph-decomposition bound for a weighted graph.

    Columns are all complete graphs on vertex subsets, looped and simple,
    split into positive and negative parts (scaling by a negative number
    turns the largest eigenvalue into the smallest, so the two parts carry
    different eigenvalue coefficients).  Maximises lambda subject to exact
    weight matching on every unordered pair including loops.
    """

    h = as_weighted(h)
    n = h.n
    if n > MAX_COMPLETE_ORDER:
        raise ValueError(f"lambda*_C capped at n <= {MAX_COMPLETE_ORDER}")
    if n == 0:
        raise ValueError("lambda*_C needs at least one vertex")
    shapes = _complete_column_shapes(n)

    lp = RationalLP(maximize=True)
    lam_p = lp.variable(obj=1)
    lam_m = lp.variable(obj=-1)
    plus = []
    minus = []
    for _ in shapes:
        plus.append(lp.variable())
        minus.append(lp.variable())

    pair_coeffs = {}
    loop_coeffs = {u: {} for u in range(n)}
    vertex_coeffs = {u: {lam_p: Q(-1), lam_m: Q(1)} for u in range(n)}
    for (u, v) in combinations(range(n), 2):
        pair_coeffs[(u, v)] = {}
    for j, (kind, s) in enumerate(shapes):
        lp_pos, lp_neg = _piece_lambda_coeffs(kind, len(s))
        for u in s:
            if lp_pos != 0:
                vertex_coeffs[u][plus[j]] = lp_pos
            if lp_neg != 0:
                vertex_coeffs[u][minus[j]] = lp_neg
            if kind == "J":
                loop_coeffs[u][plus[j]] = Q(1)
                loop_coeffs[u][minus[j]] = Q(-1)
        for a, b in combinations(s, 2):
            pair_coeffs[(a, b)][plus[j]] = Q(1)
            pair_coeffs[(a, b)][minus[j]] = Q(-1)

    pair_rows = {}
    for (u, v), coeffs in pair_coeffs.items():
        pair_rows[(u, v)] = lp.add_eq(coeffs, h.weight(u, v))
    loop_rows = {}
    for u in range(n):
        loop_rows[u] = lp.add_eq(loop_coeffs[u], h.weight(u, u))
    vertex_rows = [lp.add_ge(vertex_coeffs[u], 0) for u in range(n)]

    # warm start: one signed 2-clique per pair, one signed loop per vertex
    shape_index = {sh: j for j, sh in enumerate(shapes)}
    basis = []
    start_sum = [QZERO] * n
    for (u, v) in combinations(range(n), 2):
        w = h.weight(u, v)
        j = shape_index[("K", (u, v))]
        basis.append(plus[j] if w >= 0 else minus[j])
        start_sum[u] = start_sum[u] - abs(w)
        start_sum[v] = start_sum[v] - abs(w)
    for u in range(n):
        w = h.weight(u, u)
        j = shape_index[("J", (u,))]
        basis.append(plus[j] if w >= 0 else minus[j])
        start_sum[u] = start_sum[u] + w
    lam0 = min(start_sum)
    u_star = start_sum.index(lam0)
    basis.append(lam_m if lam0 <= 0 else lam_p)
    basis.extend(
        lp.slack_index(vertex_rows[u]) for u in range(n) if u != u_star
    )

    sol = lp.solve(start_basis=basis)
    if sol.status != OPTIMAL:
        raise SimplexError(f"lambda*_C LP came back {sol.status}")
    value = sol.objective

    nets = {}
    for j, sh in enumerate(shapes):
        a = sol.x[plus[j]] - sol.x[minus[j]]
        if a != 0:
            nets[sh] = a
    mu = denominator_lcm(nets.values())
    mult = {}
    pieces = []
    for sh in sorted(nets, key=lambda s: (s[0], len(s[1]), s[1])):
        count = nets[sh] * mu
        assert count.denominator == 1
        mult[sh] = int(count)
        pieces.append(complete_piece(sh[0], sh[1], count))
    cert = CompleteDecomposition(n, tuple(pieces))
    bound, table = complete_decomposition_bound(cert, scale(h, mu))
    if bound != value * mu:
        raise SimplexError("lambda*_C certificate failed to re-validate")
    return LambdaStarResult(value, mu, mult, table, sol.pivots)
