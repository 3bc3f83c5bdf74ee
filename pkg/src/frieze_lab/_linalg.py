"""Exact Gaussian elimination over any field whose elements support + - * /."""

from __future__ import annotations

from gmpy2 import mpq


def row_echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns (input is not modified)."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c] if not isinstance(A[r][c], int) else mpq(1, A[r][c])
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(rows: list[list]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: list[list], ncols: int | None = None) -> list[list]:
    """Basis of the right kernel {v : A v = 0}."""
    if not rows:
        return [[mpq(int(i == j)) for j in range(ncols or 0)] for i in range(ncols or 0)]
    ncols = len(rows[0])
    R, piv = row_echelon(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [mpq(0)] * ncols
        v[f] = mpq(1)
        for i, pc in enumerate(piv):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


def solve(A: list[list], b: list):
    """Unique solution of a square or overdetermined consistent system, else None."""
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, piv = row_echelon(aug)
    n = len(A[0])
    if n in piv:
        return None  # inconsistent
    if len(piv) < n:
        return None  # underdetermined
    x = [mpq(0)] * n
    for i, pc in enumerate(piv):
        x[pc] = R[i][n]
    return x
