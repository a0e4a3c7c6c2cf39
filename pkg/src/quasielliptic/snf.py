"""Smith normal form over the integers, with the unimodular transforms."""

from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)] if A else []


def smith_normal_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U*M*V = D diagonal, d_i | d_{i+1}, d_i >= 0."""
    D, U, V, _ = smith_with_inverse(M)
    return D, U, V


def smith_with_inverse(M: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """As smith_normal_form, additionally returning V^-1."""
    m = len(M)
    n = len(M[0]) if m else 0
    D = [list(map(int, r)) for r in M]
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i: int, j: int) -> None:
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(src: int, dst: int, k: int) -> None:
        # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src: int, dst: int, k: int) -> None:
        # col_dst += k * col_src ; V^-1 gets the inverse row operation
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]
        Vinv[src] = [a - k * b for a, b in zip(Vinv[src], Vinv[dst])]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    if D[t][j]:
                        done = False
            if not done:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return D, U, V, Vinv


def invariant_factors(M: Matrix) -> list[int]:
    D, _, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel(M: Matrix, ncols: int | None = None) -> Matrix:
    """Basis (as columns) of {x in Z^n : M x = 0}."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return identity(n)
    D, _, V, _ = smith_with_inverse(M)
    rank = sum(1 for i in range(min(len(D), n)) if D[i][i])
    return [row[rank:] for row in V]


def determinant(M: Matrix) -> int:
    """Exact integer determinant via fraction-free (Bareiss) elimination."""
    n = len(M)
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1
