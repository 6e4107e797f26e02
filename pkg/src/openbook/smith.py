"""Exact integer linear algebra: Smith normal form, determinants, kernels."""

from __future__ import annotations


def _as_matrix(A):
    return [[int(v) for v in row] for row in A]


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row)) for j in range(cols)] for row in A]


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def smith_normal_form(A, ncols=None):
    """Return ``(D, U, V)`` with ``U @ A @ V == D``.

    ``D`` is diagonal, non-negative, and each diagonal entry divides the next.
    ``U`` and ``V`` are unimodular. ``ncols`` is only needed for a matrix with
    zero rows, whose column count cannot be read off.
    """
    A = _as_matrix(A)
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U, V = identity(m), identity(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M in (A, V):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        for M in (A, U):
            rs, rd = M[src], M[dst]
            for c in range(len(rd)):
                rd[c] += q * rs[c]

    def add_col(dst, src, q):
        for M in (A, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return A, U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            for M in (A, U):
                M[t] = [-v for v in M[t]]
    return A, U, V


def invariant_factors(A, ncols=None):
    D, _, _ = smith_normal_form(A, ncols)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def det(A):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = _as_matrix(A)
    k = len(M)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for t in range(k - 1):
        if M[t][t] == 0:
            swap = next((i for i in range(t + 1, k) if M[i][t]), None)
            if swap is None:
                return 0
            M[t], M[swap] = M[swap], M[t]
            sign = -sign
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                M[i][j] = (M[i][j] * M[t][t] - M[i][t] * M[t][j]) // prev
        prev = M[t][t]
    return sign * M[k - 1][k - 1]


def kernel_basis(A, ncols):
    """Basis (as columns, returned as a list of vectors) of the integer kernel
    of the ``m x ncols`` matrix ``A``. The kernel is a saturated sublattice."""
    D, _, V = smith_normal_form(A, ncols)
    rank = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [[V[r][c] for r in range(ncols)] for c in range(rank, ncols)]
