"""Dense symmetric eigensolver and exact rational certificate machinery.

Eigenvalues come from a cyclic Jacobi iteration on the floating image of
the matrix (graphs here are small and dense, and Jacobi delivers the full
spectrum with orthonormal eigenvectors from very little code).  Exact
claims such as "-2 is the smallest eigenvalue" never rest on floating
point: they are certified with rational elimination (eigenvalue
membership) plus a rational LDL^T positive-semidefiniteness check of the
shifted matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Multigraph, SimpleGraph, WeightedGraph
from .rationals import Q, QZERO, as_q

MAX_ORDER = 2048
_OFF_TOL = 1e-12
_SWEEP_CAP = 64


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues with aligned orthonormal eigenvectors.

    values are ascending, vectors[:, i] belongs to values[i], and residual
    is max |A v - lambda v| over all pairs.
    """

    values: np.ndarray
    vectors: np.ndarray
    residual: float

    @property
    def lambda_min(self) -> float:
        return float(self.values[0])

    @property
    def lambda_max(self) -> float:
        return float(self.values[-1])


def _to_float_matrix(a) -> np.ndarray:
    if isinstance(a, np.ndarray) and a.dtype == float:
        return a.copy()
    rows = list(a)
    n = len(rows)
    out = np.zeros((n, n))
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != n:
            raise ValueError("matrix must be square")
        for j, x in enumerate(row):
            out[i, j] = float(x)
    return out


def jacobi_eigh(a: np.ndarray):
    """Cyclic Jacobi diagonalisation of a symmetric float matrix.

    Sweeps rotate away every off-diagonal pair until the off-diagonal
    Frobenius norm drops below 1e-12 of the matrix norm.  Returns
    (eigenvalues ascending, eigenvector columns).
    """

    a = a.copy()
    n = a.shape[0]
    v = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), v
    norm = np.linalg.norm(a)
    if norm == 0:
        return np.zeros(n), v
    for _ in range(_SWEEP_CAP):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= _OFF_TOL * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def spectrum(a) -> Spectrum:
    """Full spectrum of a symmetric matrix (rational entries or floats)."""

    af = _to_float_matrix(a)
    n = af.shape[0]
    if n > MAX_ORDER:
        raise ValueError(f"matrix order {n} exceeds the supported cap {MAX_ORDER}")
    if not np.array_equal(af, af.T):
        raise ValueError("matrix is not symmetric")
    values, vectors = jacobi_eigh(af)
    resid = 0.0
    if n:
        resid = float(np.max(np.abs(af @ vectors - vectors * values[None, :])))
    return Spectrum(values, vectors, resid)


def _graph_matrix(g) -> np.ndarray:
    if isinstance(g, (SimpleGraph, Multigraph, WeightedGraph)):
        if g.n == 0:
            raise ValueError("empty graph has no eigenvalues")
        return g.adjacency(dtype=float)
    return g


def lambda_min(g) -> float:
    """Smallest adjacency eigenvalue of a simple, multi- or weighted graph."""

    return spectrum(_graph_matrix(g)).lambda_min


def lambda_max(g) -> float:
    """Largest adjacency eigenvalue."""

    return spectrum(_graph_matrix(g)).lambda_max


# ---------------------------------------------------------------------------
# exact rational linear algebra


def _q_matrix(mat) -> list[list]:
    return [[as_q(x) for x in row] for row in mat]


def rational_nullspace(mat) -> list[list]:
    """Exact basis of the kernel of a rational matrix via Gaussian elimination.

    Returns a (possibly empty) list of rational vectors; the basis vectors
    carry a 1 in their free coordinate, so the result is deterministic.
    """

    a = _q_matrix(mat)
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_of_col[c] = r
        r += 1
        if r == nrows:
            break
    basis = []
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    for fc in free_cols:
        vec = [QZERO] * ncols
        vec[fc] = Q(1)
        for c, pr in pivot_of_col.items():
            vec[c] = -a[pr][fc]
        basis.append(vec)
    return basis


def rational_rank(mat) -> int:
    if not mat:
        return 0
    return len(mat[0]) - len(rational_nullspace(mat))


def psd_check(p, tol: float = 1e-10):
    """Floating PSD verdict via the eigensolver.

    Returns (True, None) when positive semidefinite within tol, else
    (False, witness) where the witness is an eigenvector of the most
    negative eigenvalue.
    """

    spec = spectrum(p)
    if len(spec.values) == 0:
        return True, None
    scale = 1.0 + float(np.max(np.abs(spec.values)))
    if spec.values[0] >= -tol * scale:
        return True, None
    return False, spec.vectors[:, 0].copy()


def psd_check_exact(mat) -> bool:
    """Exact rational PSD decision by LDL^T with symmetric pivoting.

    At each step the largest remaining diagonal entry is pivoted; a
    negative diagonal entry, or a zero diagonal with a nonzero residual
    row, certifies an indefinite matrix.
    """

    a = _q_matrix(mat)
    n = len(a)
    for i, row in enumerate(a):
        if len(row) != n:
            raise ValueError("matrix must be square")
        for j in range(i + 1, n):
            if row[j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    active = list(range(n))
    while active:
        piv = max(active, key=lambda i: a[i][i])
        if a[piv][piv] < 0:
            return False
        if a[piv][piv] == 0:
            # all remaining diagonals are <= 0 here, hence all are zero
            for i in active:
                if a[i][i] < 0:
                    return False
                for j in active:
                    if a[i][j] != 0:
                        return False
            return True
        d = a[piv][piv]
        active.remove(piv)
        for i in active:
            f = a[i][piv] / d
            if f == 0:
                continue
            for j in active:
                a[i][j] = a[i][j] - f * a[piv][j]
    return True


def is_exact_eigenvalue(mat, r) -> bool:
    """Exact membership test: is the rational r an eigenvalue of the matrix?"""

    a = _q_matrix(mat)
    r = as_q(r)
    for i in range(len(a)):
        a[i][i] = a[i][i] - r
    return bool(rational_nullspace(a))


def lambda_min_exact(mat, hint: float | None = None):
    """Certify the smallest eigenvalue as an exact rational, when it is one.

    Candidates with small denominator near the floating value are tested;
    r wins when r is an exact eigenvalue and A - rI is exactly PSD.
    Returns the rational or None (an irrational minimum, or no candidate).
    """

    a = _q_matrix(mat)
    if hint is None:
        hint = spectrum(a).lambda_min
    seen = set()
    candidates = []
    for den_cap in (1, 2, 3, 4, 6, 8, 12, 24, 60):
        c = Fraction(hint).limit_denominator(den_cap)
        if c not in seen:
            seen.add(c)
            candidates.append(Q(c.numerator, c.denominator))
    for r in candidates:
        if abs(float(r) - hint) > 1e-7:
            continue
        shifted = [row[:] for row in a]
        for i in range(len(shifted)):
            shifted[i][i] = shifted[i][i] - r
        if psd_check_exact(shifted) and bool(rational_nullspace(shifted)):
            return r
    return None


def verified_integer_eigenvalues(mat) -> list[int]:
    """Integers that are certified (by exact elimination) to be eigenvalues."""

    spec = spectrum(mat)
    out = []
    for r in sorted({round(float(v)) for v in spec.values}):
        if any(abs(float(v) - r) < 1e-8 for v in spec.values):
            if is_exact_eigenvalue(mat, Q(r)):
                out.append(int(r))
    return out
