"""Row reduction over a finite field and ranks of polynomial matrices."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .fields import GF
from .poly import MultiPoly, PolyMatrix, det

Row = list[int]


def rref(rows: Sequence[Sequence[int]], F: GF, ncols: int | None = None) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    m = [list(r) for r in rows]
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, a) for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]], F: GF, ncols: int | None = None) -> int:
    return len(rref(rows, F, ncols)[1])


def nullspace(rows: Sequence[Sequence[int]], F: GF, ncols: int) -> list[Row]:
    """A basis of {v : rows . v = 0}, one vector per free column."""
    red, pivots = rref(rows, F, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, p in enumerate(pivots):
            v[p] = F.neg(red[r][f])
        basis.append(v)
    return basis


def poly_rank(M: PolyMatrix) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Rank over the fraction field, with the rows and columns of a nonzero maximal minor."""
    nr, nc = M.shape
    for r in range(min(nr, nc), 0, -1):
        for rows in combinations(range(nr), r):
            for cols in combinations(range(nc), r):
                if not det(M.submatrix(rows, cols)).is_zero():
                    return r, (rows, cols)
    return 0, None


def poly_kernel_vector(M: PolyMatrix) -> list[MultiPoly] | None:
    """A nonzero polynomial vector in the right kernel, built from maximal minors (Cramer)."""
    F = M.F
    nr, nc = M.shape
    r, where = poly_rank(M)
    if r == nc:
        return None
    zero = MultiPoly(F, {})
    if where is None:
        return [MultiPoly.const(F, 1)] + [zero] * (nc - 1)
    rows, cols = where
    extra = next(c for c in range(nc) if c not in cols)
    chosen = sorted(cols + (extra,))
    v = [zero] * nc
    for k, c in enumerate(chosen):
        rest = tuple(d for d in chosen if d != c)
        minor = det(M.submatrix(rows, rest))
        v[c] = minor if k % 2 == 0 else -minor
    return v
