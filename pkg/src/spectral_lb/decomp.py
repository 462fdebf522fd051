"""Weighted graph decompositions, clique partitions and equality certificates.

A decomposition writes a weighted graph H as an exact rational sum of
weighted pieces living on vertex subsets.  The smallest eigenvalue of H is
then at least the worst per-vertex sum of piece eigenvalues, with an
explicit certificate (a null vector of the shifted adjacency matrix)
characterising equality.  Specialisations cover signed complete-graph
pieces, clique partitions of integer multiples of a simple graph, line
graphs of multigraphs, and the cubic trick for odd graph powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import (
    Multigraph,
    SimpleGraph,
    WeightedGraph,
    as_weighted,
    build_simple,
    embed,
    line_graph,
    line_graph_vertices,
    power_multigraph,
    scale,
    special_graph,
    weighted_from_multigraph,
    weighted_from_simple,
)
from .rationals import Q, QZERO, as_q
from .spectra import lambda_min_exact, rational_nullspace, spectrum


class DecompositionError(ValueError):
    """Raised when a claimed decomposition or partition fails to validate."""


# ---------------------------------------------------------------------------
# general weighted decompositions


@dataclass(frozen=True)
class Piece:
    """A weighted piece together with its embedding into the target vertex set."""

    graph: WeightedGraph
    embedding: tuple[int, ...]

    def embedded(self, n: int) -> WeightedGraph:
        return embed(self.graph, n, self.embedding)


@dataclass(frozen=True)
class Decomposition:
    target: WeightedGraph
    pieces: tuple[Piece, ...]


def piece_on(graph, embedding=None, n=None) -> Piece:
    """Wrap a graph as a piece; identity embedding by default."""

    h = as_weighted(graph)
    if embedding is None:
        embedding = range(h.n)
    emb = tuple(embedding)
    if n is not None:
        embed(h, n, emb)  # validates
    return Piece(h, emb)


def decomposition(target, pieces) -> Decomposition:
    h = as_weighted(target)
    out = []
    for p in pieces:
        if not isinstance(p, Piece):
            p = piece_on(p)
        p.embedded(h.n)  # validates embedding against the target order
        out.append(p)
    return Decomposition(h, tuple(out))


def validate(d: Decomposition) -> None:
    """Check that the embedded piece weights sum exactly to the target weights."""

    total = {}
    for p in d.pieces:
        for pair, w in p.embedded(d.target.n).weights.items():
            s = total.get(pair, QZERO) + w
            if s == 0:
                total.pop(pair, None)
            else:
                total[pair] = s
    if total != d.target.weights:
        bad = []
        for pair in sorted(set(total) | set(d.target.weights)):
            got = total.get(pair, QZERO)
            want = d.target.weights.get(pair, QZERO)
            if got != want:
                bad.append(f"{pair}: sum {got} != target {want}")
        raise DecompositionError("weight mismatch at " + "; ".join(bad[:8]))


@dataclass(frozen=True)
class PieceLambda:
    value: float
    exact: object | None  # rational when the minimum eigenvalue is certified


def _uniform_weight(h: WeightedGraph):
    vals = set(h.weights.values())
    return vals.pop() if len(vals) == 1 else None


def piece_lambda(h) -> PieceLambda:
    """Smallest eigenvalue of a piece, exact for the shapes that admit one.

    Scaled I/J/K pieces have closed forms; uniformly weighted pieces reduce
    to an integer matrix where rational eigenvalues are certified exactly;
    anything else falls back to the eigensolver (and an exact certificate
    attempt on the rational adjacency matrix).
    """

    h = as_weighted(h)
    n = h.n
    if h.is_zero:
        return PieceLambda(0.0, QZERO)
    c = _uniform_weight(h)
    if c is not None:
        keys = set(h.weights)
        if keys == {(u, u) for u in range(n)}:
            return PieceLambda(float(c), c)  # cI_n
        all_pairs = {(u, v) for u in range(n) for v in range(u, n)}
        if keys == all_pairs:  # cJ_n
            if n == 1:
                return PieceLambda(float(c), c)
            val = QZERO if c > 0 else c * n
            return PieceLambda(float(val), val)
        if keys == {(u, v) for u in range(n) for v in range(u + 1, n)}:  # cK_n
            val = -c if c > 0 else c * (n - 1)
            return PieceLambda(float(val), val)
        if all(u != v for u, v in keys):
            # uniform weight on a simple support graph: lambda scales from the
            # 0/1 matrix, whose rational eigenvalues are integers
            base = build_simple(n, list(keys))
            spec = spectrum(base.adjacency(dtype=float))
            aq = base.adjacency(dtype=object)
            if c > 0:
                ext = lambda_min_exact(aq, hint=float(spec.values[0]))
                if ext is not None:
                    return PieceLambda(float(c * ext), c * ext)
                return PieceLambda(float(c) * float(spec.values[0]), None)
            neg = [[-x for x in row] for row in aq]
            ext = lambda_min_exact(neg, hint=-float(spec.values[-1]))
            if ext is not None:  # lambda_max(A) = -lambda_min(-A)
                return PieceLambda(float(c * -ext), c * -ext)
            return PieceLambda(float(c) * float(spec.values[-1]), None)
    spec = spectrum(h.adjacency(dtype=float))
    exact = lambda_min_exact(h.adjacency_q(), hint=spec.lambda_min)
    return PieceLambda(spec.lambda_min if exact is None else float(exact), exact)


@dataclass(frozen=True)
class DecompositionBound:
    """min-per-vertex bound together with the full per-vertex table."""

    value: float
    per_vertex: tuple[float, ...]
    exact: object | None
    per_vertex_exact: tuple | None


def decomposition_bound(d: Decomposition) -> DecompositionBound:
    """Lower bound min over vertices u of the summed piece minima at u."""

    validate(d)
    n = d.target.n
    lambdas = [piece_lambda(p.graph) for p in d.pieces]
    table = [0.0] * n
    for p, pl in zip(d.pieces, lambdas):
        for u in p.embedding:
            table[u] += pl.value
    exact_table = None
    exact_value = None
    if all(pl.exact is not None for pl in lambdas):
        exact_table = [QZERO] * n
        for p, pl in zip(d.pieces, lambdas):
            for u in p.embedding:
                exact_table[u] = exact_table[u] + pl.exact
        exact_value = min(exact_table)
        return DecompositionBound(
            float(exact_value),
            tuple(float(x) for x in exact_table),
            exact_value,
            tuple(exact_table),
        )
    return DecompositionBound(min(table), tuple(table), None, None)


@dataclass(frozen=True)
class Certificate:
    """Equality certificate: a nonzero null vector of the shifted matrix."""

    vector: tuple
    exact: bool


def _piece_matrices(d: Decomposition, lambdas, exact: bool):
    n = d.target.n
    if exact:
        p = [[QZERO] * n for _ in range(n)]
    else:
        p = np.zeros((n, n))
    for piece, pl in zip(d.pieces, lambdas):
        lam = pl.exact if exact else (
            pl.value if pl.exact is None else pl.exact
        )
        emb = piece.embedding
        for (a, b), w in piece.graph.weights.items():
            u, v = emb[a], emb[b]
            val = w if exact else float(w)
            if exact:
                p[u][v] = p[u][v] + val
                if u != v:
                    p[v][u] = p[v][u] + val
            else:
                p[u][v] += val
                if u != v:
                    p[v][u] += val
        for a in range(piece.graph.n):
            u = emb[a]
            if exact:
                p[u][u] = p[u][u] - lam
            else:
                p[u][u] -= float(lam)
    return p


def equality_certificate(d: Decomposition) -> Certificate | None:
    """Search for the decomposition-bound equality certificate.

    Builds P = sum_j (M_j - lambda(H^j) E_j) + (rI - R) and looks for a
    nonzero null vector.  The kernel search is exact rational when every
    piece minimum is certified rational, and a floating eigensolver kernel
    (tolerance 1e-8) otherwise.
    """

    validate(d)
    n = d.target.n
    lambdas = [piece_lambda(p.graph) for p in d.pieces]
    all_exact = all(pl.exact is not None for pl in lambdas)
    if all_exact:
        table = [QZERO] * n
        for p, pl in zip(d.pieces, lambdas):
            for u in p.embedding:
                table[u] = table[u] + pl.exact
        r = -min(table)
        pm = _piece_matrices(d, lambdas, exact=True)
        for u in range(n):
            pm[u][u] = pm[u][u] + (r - (-table[u]))
        kernel = rational_nullspace(pm)
        if not kernel:
            return None
        x = kernel[0]
        _verify_conditions_exact(d, lambdas, table, x)
        return Certificate(tuple(x), True)
    table = [0.0] * n
    for p, pl in zip(d.pieces, lambdas):
        for u in p.embedding:
            table[u] += pl.value
    r = -min(table)
    pm = _piece_matrices(d, lambdas, exact=False)
    for u in range(n):
        pm[u][u] += r - (-table[u])
    spec = spectrum(pm)
    scale_ = 1.0 + float(np.max(np.abs(spec.values))) if n else 1.0
    null_cols = [i for i, v in enumerate(spec.values) if abs(v) <= 1e-8 * scale_]
    if not null_cols:
        return None
    x = spec.vectors[:, null_cols[0]]
    if not _conditions_hold_float(d, lambdas, table, x):
        return None
    return Certificate(tuple(float(v) for v in x), False)


def _conditions_hold_float(d, lambdas, table, x, tol=1e-6):
    lam_d = min(table)
    for u, t in enumerate(table):
        if t > lam_d + tol and abs(x[u]) > tol:
            return False
    for piece, pl in zip(d.pieces, lambdas):
        xj = np.array([x[u] for u in piece.embedding])
        if np.max(np.abs(xj)) <= tol:
            continue
        aj = piece.graph.adjacency(dtype=float)
        if np.max(np.abs(aj @ xj - pl.value * xj)) > tol:
            return False
    return True


def _verify_conditions_exact(d, lambdas, table, x):
    lam_d = min(table)
    for u, t in enumerate(table):
        if t != lam_d and x[u] != 0:
            raise AssertionError("certificate violates the support condition")
    for piece, pl in zip(d.pieces, lambdas):
        emb = piece.embedding
        xj = [x[u] for u in emb]
        if all(v == 0 for v in xj):
            continue
        aj = piece.graph.adjacency_q()
        for i in range(piece.graph.n):
            acc = -pl.exact * xj[i]
            for j in range(piece.graph.n):
                acc = acc + aj[i][j] * xj[j]
            if acc != 0:
                raise AssertionError("certificate restriction is not a minimum eigenvector")


# ---------------------------------------------------------------------------
# complete graph decompositions (signed K and J pieces)


@dataclass(frozen=True)
class CompletePiece:
    """A signed multiple of a complete (K) or looped complete (J) graph."""

    kind: str
    subset: tuple[int, ...]
    coeff: object

    def __post_init__(self):
        if self.kind not in ("K", "J"):
            raise ValueError("piece kind must be 'K' or 'J'")
        if len(set(self.subset)) != len(self.subset):
            raise ValueError("piece subset has repeated vertices")
        if self.kind == "K" and len(self.subset) < 2:
            raise ValueError("K pieces need order at least 2")
        if self.kind == "J" and len(self.subset) < 1:
            raise ValueError("J pieces need order at least 1")
        object.__setattr__(self, "subset", tuple(sorted(self.subset)))
        object.__setattr__(self, "coeff", as_q(self.coeff))
        if self.coeff == 0:
            raise ValueError("piece coefficient must be nonzero")


@dataclass(frozen=True)
class CompleteDecomposition:
    n: int
    pieces: tuple[CompletePiece, ...]


def complete_piece(kind: str, subset, coeff=1) -> CompletePiece:
    return CompletePiece(kind, tuple(subset), coeff)


def complete_piece_lambda(piece: CompletePiece):
    """Exact smallest eigenvalue of a signed complete piece.

    For a > 0: aK_n has -a, aJ_n has 0 (a for n = 1); for a < 0 the scaled
    largest eigenvalue takes over: a(n-1) for K, an for J.
    """

    a, s = piece.coeff, len(piece.subset)
    if piece.kind == "K":
        return -a if a > 0 else a * (s - 1)
    if s == 1:
        return a
    return QZERO if a > 0 else a * s


def complete_piece_weights(piece: CompletePiece) -> dict:
    w = {}
    s = piece.subset
    for i, u in enumerate(s):
        if piece.kind == "J":
            w[(u, u)] = piece.coeff
        for v in s[i + 1 :]:
            w[(u, v)] = piece.coeff
    return w


def validate_complete(c: CompleteDecomposition, h) -> None:
    h = as_weighted(h)
    if c.n != h.n:
        raise DecompositionError("decomposition and target orders differ")
    total = {}
    for piece in c.pieces:
        if piece.subset and piece.subset[-1] >= c.n:
            raise DecompositionError("piece subset out of range")
        for pair, w in complete_piece_weights(piece).items():
            s = total.get(pair, QZERO) + w
            if s == 0:
                total.pop(pair, None)
            else:
                total[pair] = s
    if total != h.weights:
        bad = sorted(
            pair
            for pair in set(total) | set(h.weights)
            if total.get(pair, QZERO) != h.weights.get(pair, QZERO)
        )
        raise DecompositionError(f"complete decomposition mismatch at pairs {bad[:8]}")


def complete_decomposition_bound(c: CompleteDecomposition, h):
    """Per-vertex sums of exact piece minima and their minimum."""

    h = as_weighted(h)
    validate_complete(c, h)
    table = [QZERO] * c.n
    for piece in c.pieces:
        lam = complete_piece_lambda(piece)
        for u in piece.subset:
            table[u] = table[u] + lam
    return min(table), tuple(table)


def complete_equality_certificate(c: CompleteDecomposition, h):
    """Equality certificate for a complete graph decomposition, or None.

    The conditions are linear: x vanishes off the minimising vertices, is
    constant on negative pieces, and sums to zero on positive pieces of
    order above one; any nonzero solution certifies equality.
    """

    bound, table = complete_decomposition_bound(c, h)
    rows = []
    n = c.n
    for u in range(n):
        if table[u] != bound:
            row = [QZERO] * n
            row[u] = Q(1)
            rows.append(row)
    for piece in c.pieces:
        s = piece.subset
        if len(s) == 1:
            continue
        if piece.coeff > 0:
            row = [QZERO] * n
            for u in s:
                row[u] = Q(1)
            rows.append(row)
        else:
            base = s[0]
            for u in s[1:]:
                row = [QZERO] * n
                row[base] = Q(1)
                row[u] = Q(-1)
                rows.append(row)
    if not rows:
        rows = [[QZERO] * n]
    kernel = rational_nullspace(rows)
    return tuple(kernel[0]) if kernel else None


def multipartite_decomposition(parts):
    """(J_n - sum_j J_{n_j}, K_{n1,...,nm}) on consecutively indexed parts."""

    parts = list(parts)
    n = sum(parts)
    pieces = [complete_piece("J", range(n), 1)]
    start = 0
    target = {}
    bounds = []
    for p in parts:
        pieces.append(complete_piece("J", range(start, start + p), -1))
        bounds.append(range(start, start + p))
        start += p
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in bounds[i]:
                for v in bounds[j]:
                    target[(u, v) if u < v else (v, u)] = Q(1)
    return CompleteDecomposition(n, tuple(pieces)), WeightedGraph(n, target)


# ---------------------------------------------------------------------------
# clique partitions


@dataclass(frozen=True)
class CliquePartition:
    """Multiset of cliques covering every edge of mu G exactly mu times."""

    mu: int
    cliques: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.mu < 1:
            raise ValueError("multiplier mu must be a positive integer")
        object.__setattr__(
            self, "cliques", tuple(tuple(sorted(k)) for k in self.cliques)
        )


def validate_partition(k: CliquePartition, g: SimpleGraph) -> None:
    counts = {}
    for cl in k.cliques:
        if len(cl) < 2:
            raise DecompositionError(f"clique {cl} has fewer than two vertices")
        if len(set(cl)) != len(cl):
            raise DecompositionError(f"clique {cl} repeats a vertex")
        for i, u in enumerate(cl):
            if not 0 <= u < g.n:
                raise DecompositionError(f"clique vertex {u} out of range")
            for v in cl[i + 1 :]:
                if not g.has_edge(u, v):
                    raise DecompositionError(
                        f"subset {cl} is not a clique: {u}-{v} is not an edge"
                    )
                counts[(u, v)] = counts.get((u, v), 0) + 1
    for u, v in g.edges():
        c = counts.pop((u, v), 0)
        if c != k.mu:
            raise DecompositionError(
                f"edge ({u}, {v}) covered {c} times, expected mu = {k.mu}"
            )
    if counts:
        raise DecompositionError(f"cover touches non-edges: {sorted(counts)[:8]}")


def clique_partition_stats(k: CliquePartition, g: SimpleGraph):
    """(per-vertex clique counts r_u, r = max, smallest clique order)."""

    validate_partition(k, g)
    r_u = [0] * g.n
    for cl in k.cliques:
        for u in cl:
            r_u[u] += 1
    r = max(r_u, default=0)
    c_min = min((len(cl) for cl in k.cliques), default=0)
    return r_u, r, c_min


def clique_partition_bound(k: CliquePartition, g: SimpleGraph):
    """-r(K)/mu as an exact rational (0 for the empty partition of an edgeless G)."""

    _, r, _ = clique_partition_stats(k, g)
    return Q(-r, k.mu)


def clique_equality_certificate(k: CliquePartition, g: SimpleGraph):
    """Nonzero x with N^T x = 0 vanishing off the max-r vertices, or None."""

    r_u, r, _ = clique_partition_stats(k, g)
    if not k.cliques:
        return None
    rows = []
    n = g.n
    for u in range(n):
        if r_u[u] < r:
            row = [QZERO] * n
            row[u] = Q(1)
            rows.append(row)
    for cl in k.cliques:
        row = [QZERO] * n
        for u in cl:
            row[u] = Q(1)
        rows.append(row)
    kernel = rational_nullspace(rows)
    return tuple(kernel[0]) if kernel else None


@dataclass(frozen=True)
class EssentialReduction:
    """Fixed point of the essential-vertex deletion iteration."""

    vstar: tuple[int, ...]
    kstar: CliquePartition | None
    gstar: SimpleGraph


def essential_vertices(k: CliquePartition, g: SimpleGraph) -> EssentialReduction:
    """Iteratively delete vertices met by some clique in exactly one point.

    Starts from the max-r vertex set; the fixed point V* has every clique
    disjoint from it or meeting it in two or more vertices, so restricting
    the partition keeps r_u constant at r on V*.
    """

    r_u, r, _ = clique_partition_stats(k, g)
    current = {u for u in range(g.n) if r_u[u] == r}
    while True:
        drop = set()
        for cl in k.cliques:
            inside = [u for u in cl if u in current]
            if len(inside) == 1:
                drop.add(inside[0])
        if not drop:
            break
        current -= drop
    vstar = tuple(sorted(current))
    gstar = g.induced(vstar)
    if not vstar:
        return EssentialReduction(vstar, None, gstar)
    index = {u: i for i, u in enumerate(vstar)}
    restricted = []
    for cl in k.cliques:
        inside = tuple(sorted(index[u] for u in cl if u in current))
        if inside:
            restricted.append(inside)
    kstar = CliquePartition(k.mu, tuple(restricted))
    star_r_u, star_r, _ = clique_partition_stats(kstar, gstar)
    if any(x != r for x in star_r_u):
        raise AssertionError("restricted partition lost the constant r property")
    assert star_r == r
    return EssentialReduction(vstar, kstar, gstar)


# ---------------------------------------------------------------------------
# odd powers: the cubic trick


def cube_decomposition(g: SimpleGraph, alpha, beta, gamma) -> Decomposition:
    """Decomposition of G^(3) as alpha G + beta K_n + gamma I_n."""

    target = weighted_from_multigraph(power_multigraph(g, 3))
    pieces = []
    alpha, beta, gamma = as_q(alpha), as_q(beta), as_q(gamma)
    if alpha != 0:
        pieces.append(piece_on(scale(weighted_from_simple(g), alpha)))
    if beta != 0:
        pieces.append(piece_on(scale(special_graph("K", g.n), beta)))
    if gamma != 0:
        pieces.append(piece_on(scale(special_graph("I", g.n), gamma)))
    return Decomposition(target, tuple(pieces))


def _classify_cube_piece(h: WeightedGraph, g: SimpleGraph):
    c = _uniform_weight(h)
    if c is None:
        return None
    keys = set(h.weights)
    n = g.n
    if keys == {(u, u) for u in range(n)}:
        return ("gamma", c)
    if keys == {(u, v) for u in range(n) for v in range(u + 1, n)}:
        return ("beta", c)
    if keys == set(g.edges()):
        return ("alpha", c)
    return None


def cubic_power_bound(g: SimpleGraph, d3: Decomposition) -> float:
    """Lower bound on lambda(G) from a decomposition of G^(3).

    With G^(3) = alpha G + beta K_n + gamma I_n and z = lambda(G), the odd
    power identity gives z^3 >= alpha z - beta + gamma, so z is at least
    the smallest real root of z^3 - alpha z + beta - gamma.
    """

    want = weighted_from_multigraph(power_multigraph(g, 3))
    if as_weighted(d3.target).weights != want.weights:
        raise DecompositionError("decomposition target is not G^(3)")
    validate(d3)
    alpha = beta = gamma = QZERO
    for p in d3.pieces:
        shaped = _classify_cube_piece(p.embedded(g.n), g)
        if shaped is None:
            raise DecompositionError(
                "cube decomposition pieces must be multiples of G, K_n or I_n"
            )
        kind, c = shaped
        if kind == "alpha":
            alpha = alpha + c
        elif kind == "beta":
            beta = beta + c
        else:
            gamma = gamma + c
    if alpha < 0 or beta < 0:
        raise DecompositionError("alpha and beta must be nonnegative")
    return _min_real_cubic_root(float(alpha), float(beta - gamma))


def _min_real_cubic_root(a: float, b: float) -> float:
    """Smallest real root of z^3 - a z + b, polished to residual < 1e-12."""

    roots = np.roots([1.0, 0.0, -a, b])
    real = [float(r.real) for r in roots if abs(r.imag) < 1e-6 * (1 + abs(r))]
    z = min(real)
    for _ in range(200):
        f = z * z * z - a * z + b
        fp = 3 * z * z - a
        if fp == 0:
            break
        step = f / fp
        z -= step
        if abs(step) < 1e-17 * max(1.0, abs(z)):
            break
    return z


# ---------------------------------------------------------------------------
# line graphs of multigraphs


def claw_decomposition(mg: Multigraph) -> Decomposition:
    """The decomposition of L(multigraph) by the claw subgraphs T(u).

    T(u) is complete multipartite with parts given by the multiplicities of
    the edges at u; vertices of degree one in the underlying graph give
    edgeless T(u) and are omitted.
    """

    if not mg.is_loopless:
        raise ValueError("line graph machinery needs a loopless multigraph")
    verts = line_graph_vertices(mg)
    lg = line_graph(mg)
    target = weighted_from_simple(lg)
    pieces = []
    for u in range(mg.n):
        members = [i for i, (a, b, _) in enumerate(verts) if u in (a, b)]
        if len({_other(verts[i], u) for i in members}) < 2:
            continue  # edgeless claw
        sub = {}
        for ii, i in enumerate(members):
            for jj in range(ii + 1, len(members)):
                j = members[jj]
                if _other(verts[i], u) != _other(verts[j], u):
                    sub[(ii, jj)] = Q(1)
        piece = WeightedGraph(len(members), sub)
        pieces.append(Piece(piece, tuple(members)))
    return Decomposition(target, tuple(pieces))


def _other(inst, u):
    a, b, _ = inst
    return b if a == u else a


def line_graph_bound(mg: Multigraph):
    """Exact lower bound on lambda(L(multigraph)) from the claw decomposition.

    Each claw T(u) is complete multipartite, so lambda(T(u)) is at least
    minus its largest part size (the largest multiplicity at u); summing
    the two endpoint contributions per line-graph vertex and taking the
    minimum gives the bound, always at least -2 mu.  Twig replication is
    covered by the same computation because edgeless claws drop out.
    """

    if not mg.is_loopless:
        raise ValueError("line graph bound needs a loopless multigraph")
    verts = line_graph_vertices(mg)
    if not verts:
        return QZERO
    lam = {}
    for u in range(mg.n):
        incident = {(a, b): m for (a, b), m in mg.mult.items() if u in (a, b)}
        others = {a if b == u else b for a, b in incident}
        if len(others) >= 2:
            lam[u] = -max(incident.values())
    best = None
    for u, v, _ in verts:
        val = Q(lam.get(u, 0) + lam.get(v, 0))
        if best is None or val < best:
            best = val
    return best


# ---------------------------------------------------------------------------
# products


def cartesian_copy_decomposition(g1: SimpleGraph, g2: SimpleGraph, product=None) -> Decomposition:
    """Decompose G1 [] G2 into the copies of G1 and G2 along the two axes."""

    from .graphs import cartesian_product

    prod = product if product is not None else cartesian_product(g1, g2)
    target = weighted_from_simple(prod)
    n2 = g2.n
    pieces = []
    for v in range(n2):
        pieces.append(Piece(weighted_from_simple(g1), tuple(u * n2 + v for u in range(g1.n))))
    for u in range(g1.n):
        pieces.append(Piece(weighted_from_simple(g2), tuple(u * n2 + v for v in range(n2))))
    return Decomposition(target, tuple(pieces))
