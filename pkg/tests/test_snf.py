from functools import reduce
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, strategies as st

from quasielliptic.snf import determinant, integer_kernel, invariant_factors, matmul, smith_normal_form


def minor_gcds(M):
    """d_k = gcd of k x k minors; the oracle for invariant factors."""
    m, n = len(M), len(M[0])
    out = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, determinant([[M[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def leibniz(M):
    from itertools import permutations

    n = len(M)
    total = 0
    for p in permutations(range(n)):
        sign = (-1) ** sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += sign * reduce(lambda a, i: a * M[i][p[i]], range(n), 1)
    return total


@pytest.mark.parametrize("M,diag", [
    ([[1, 0], [0, 1]], [1, 1]),
    ([[2, 0], [0, 2]], [2, 2]),
    ([[2, 4], [6, 8]], [2, 4]),
])
def test_examples(M, diag):
    assert invariant_factors(M) == diag


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(matrices)
def test_smith_form_contract(M):
    D, U, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    m, n = len(M), len(M[0])
    d = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(x >= 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1) if d[i])


@given(matrices)
def test_invariant_factors_match_minor_gcds(M):
    d = invariant_factors(M)
    g = minor_gcds(M)
    prod = 1
    for k, dk in enumerate(d, 1):
        prod *= dk
        assert prod == g[k]


@given(matrices)
def test_kernel(M):
    K = integer_kernel(M)
    for j in range(len(K[0]) if K else 0):
        col = [row[j] for row in K]
        assert all(sum(a * b for a, b in zip(r, col)) == 0 for r in M)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_determinant(M):
    assert determinant(M) == leibniz(M)
