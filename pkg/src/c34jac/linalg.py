"""Textbook Gaussian elimination over F_p on lists of lists.

Used by the oracle and by tests; never by the counted fast path.
"""

from __future__ import annotations

Matrix = list[list[int]]


def rref(rows: Matrix, p: int, col_order: list[int] | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    ``col_order`` sets the order in which columns are tried as pivots
    (default left to right); the returned matrix keeps the original layout.
    """
    A = [[v % p for v in row] for row in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    order = list(range(ncols)) if col_order is None else list(col_order)
    pivots = []
    r = 0
    for c in order:
        pivot = next((k for k in range(r, len(A)) if A[k][c]), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [v * inv % p for v in A[r]]
        for k in range(len(A)):
            if k != r and A[k][c]:
                factor = A[k][c]
                A[k] = [(u - factor * v) % p for u, v in zip(A[k], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(rows: Matrix, p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Matrix, p: int, ncols: int | None = None) -> Matrix:
    """Basis of {v : rows @ v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[int(i == k) for i in range(ncols)] for k in range(ncols)]
    R, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in zip(R, pivots):
            v[pc] = -row[fcol] % p
        basis.append(v)
    return basis


def matvec(rows: Matrix, v: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in rows]


def matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in A]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def solve(rows: Matrix, rhs: list[int], p: int) -> list[int] | None:
    """One solution of rows @ z = rhs (free variables set to 0), or None."""
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    R, pivots = rref(aug, p)
    if ncols in pivots:
        return None
    z = [0] * ncols
    for row, pc in zip(R, pivots):
        z[pc] = row[ncols]
    return z


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]
