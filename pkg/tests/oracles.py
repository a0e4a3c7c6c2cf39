"""Slow reference implementations used only by the tests."""

from __future__ import annotations

from itertools import product


def _bfs_order(gram) -> list[int]:
    n = len(gram)
    order: list[int] = []
    seen = set()
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in range(n):
                if w not in seen and gram[v][w] > 0:
                    seen.add(w)
                    queue.append(w)
    return order


def count_automorphisms(gram, colors=None) -> int:
    """Plain backtracking over vertex images in BFS order, checking every assigned pair."""
    n = len(gram)
    colors = colors or [gram[i][i] for i in range(n)]
    order = _bfs_order(gram)
    image: dict[int, int] = {}
    used = [False] * n

    def extend(k: int) -> int:
        if k == n:
            return 1
        i = order[k]
        total = 0
        for c in range(n):
            if used[c] or colors[c] != colors[i]:
                continue
            if any(gram[i][j] != gram[c][image[j]] for j in order[:k]):
                continue
            image[i], used[c] = c, True
            total += extend(k + 1)
            used[c] = False
            del image[i]
        return total

    return extend(0)


def brute_singular_points(f, E):
    """All points of P^2(E) where f and its three partials vanish, by direct evaluation."""
    f = f.embed(E)
    parts = [f, f.diff("x"), f.diff("y"), f.diff("z")]
    pts = [(a, b, 1) for a, b in product(range(E.q), repeat=2)]
    pts += [(a, 1, 0) for a in range(E.q)] + [(1, 0, 0)]
    return [P for P in pts if all(g.at(P) == 0 for g in parts)]


def brute_zeros(polys, E):
    pts = [(a, b, 1) for a, b in product(range(E.q), repeat=2)]
    pts += [(a, 1, 0) for a in range(E.q)] + [(1, 0, 0)]
    polys = [p.embed(E) for p in polys]
    return [P for P in pts if all(p.at(P) == 0 for p in polys)]
