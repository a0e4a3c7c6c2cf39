import random
import re

import pytest

from oracles import count_automorphisms
from quasielliptic import registry as R
from quasielliptic import verify as V
from quasielliptic.curves import ConfigurationError
from quasielliptic.graph import (
    automorphisms, canonical_form, canonical_matrix, export_dot, find_isomorphism,
    graph_automorphisms, graph_from_classes, is_automorphism,
)
from quasielliptic.picard import ClassKind, parse_label

ALL = list(R.CHAR2_ORDER) + list(R.CHAR3_ORDER)


def permute(gram, perm):
    # new vertex k is old vertex perm[k]
    return [[gram[perm[i]][perm[j]] for j in range(len(gram))] for i in range(len(gram))]


def exchange_blocks(n, diag, off):
    # diag*I + off*J with J the anti-diagonal exchange matrix
    return [[(diag if i == j else 0) + (off if i + j == n - 1 else 0) for j in range(n)] for i in range(n)]


def test_a1_eight_blocks_match_published():
    G = V.config_graph("A1~^8")
    two = [i for i, v in enumerate(G.vertices) if v.kind is ClassKind.MINUS_TWO]
    one = [i for i, v in enumerate(G.vertices) if v.kind is ClassKind.MINUS_ONE]
    assert len(two) == len(one) == 16
    B = exchange_blocks(16, -2, 2)
    Rb = exchange_blocks(16, -1, 1)
    M = [list(r) for r in R.PUBLISHED_MATRICES["A1~^8_M"]]
    published = [B[i] + M[i] for i in range(16)] + [[M[j][i] for j in range(16)] + Rb[i] for i in range(16)]
    kinds = [0] * 16 + [1] * 16
    ours = [G.vertices[v].kind is ClassKind.MINUS_ONE for v in range(G.n)]
    perm = find_isomorphism(G.gram, published, [int(k) for k in ours], kinds)
    assert perm is not None
    # exact block identities under the ordering found
    order = [None] * G.n
    for ours_idx, pub_idx in enumerate(perm):
        order[pub_idx] = ours_idx
    assert permute(G.gram, order) == published


def test_graph_invariants():
    for name in ALL:
        G = V.config_graph(name)
        n = G.n
        assert all(G.gram[i][j] == G.gram[j][i] for i in range(n) for j in range(n))
        assert all(G.gram[i][i] in (-1, -2) for i in range(n))
        assert all(G.gram[i][j] >= 0 for i in range(n) for j in range(n) if i != j)
        two = G.kind_count(ClassKind.MINUS_TWO)
        assert all(v.kind is ClassKind.MINUS_TWO for v in G.vertices[:two])


def test_negative_intersection_rejected():
    with pytest.raises(ConfigurationError):
        graph_from_classes([parse_label("e1-e2"), parse_label("e1-e3")])


def test_single_vertex():
    assert automorphisms([[-1]]).order == 1


@pytest.mark.parametrize("name", ALL[1:])
def test_automorphism_order_matches_brute_force(name):
    G = V.config_graph(name)
    assert graph_automorphisms(G).order == count_automorphisms(G.gram)


def test_a1_eight_group_by_closure():
    G = V.config_graph("A1~^8")
    aut = graph_automorphisms(G)
    colors = G.colors()
    ident = tuple(range(G.n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in aut.generators:
                q = tuple(g[p[i]] for i in range(G.n))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    assert len(seen) == aut.order == 21504
    assert all(is_automorphism(G.gram, g, colors) for g in aut.generators)
    # swapping the two curves of each A1~ fibre is possible, giving at least 2^8
    assert aut.order % 8 == 0


@pytest.mark.parametrize("name", ["A1~^4+D4~", "D4~^2", "A2~^4"])
def test_canonical_form_permutation_invariant(name):
    G = V.config_graph(name)
    colors = G.colors()
    base = canonical_matrix(G.gram, colors)
    rng = random.Random(11)
    for _ in range(100):
        perm = list(range(G.n))
        rng.shuffle(perm)
        assert canonical_matrix(permute(G.gram, perm), [colors[p] for p in perm]) == base


def test_canonical_relabel_is_an_isomorphism():
    G = V.config_graph("A2~+E6~")
    (colors, matrix), order = canonical_form(G.gram, G.colors())
    assert tuple(map(tuple, permute(G.gram, order))) == matrix
    assert sorted(order) == list(range(G.n))


def test_non_isomorphic_small_graphs_differ():
    path = [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]
    triangle = [[-2, 1, 1], [1, -2, 1], [1, 1, -2]]
    assert canonical_matrix(path) != canonical_matrix(triangle)


def test_relabelled_first_case_diagram_same_shape():
    from quasielliptic.blowdown import relabel_diagram

    cfg = R.configuration("A1~^8")
    pres = V.published_presentation("A1~^8", 2)
    new = relabel_diagram(cfg, pres)
    a = graph_from_classes(cfg.neg_two_curves)
    b = graph_from_classes(new.neg_two_curves)
    assert canonical_matrix(a.gram) == canonical_matrix(b.gram)


def dot_edges(text):
    return re.findall(r"v(\d+) -- v(\d+);", text)


def test_dot_parallel_edges():
    G = graph_from_classes([parse_label("l-127"), parse_label("2l-345689")])
    text = export_dot(G, "A1")
    assert dot_edges(text) == [("0", "1"), ("0", "1")]
    assert text.count("fillcolor=black") == 2


def test_dot_first_blowdown_diagram():
    G = V.config_graph("A1~^8")
    S = sorted(V.config_classes("A1~^8")[0].representative.vertex_set)
    text = export_dot(G.subgraph(S))
    assert text.count("xlabel") == 9
    assert len(dot_edges(text)) == 4
    # sections are hollow
    assert text.count("style=solid") == 5


def test_dot_e8_shape():
    cfg = R.configuration("E8~")
    text = export_dot(graph_from_classes(cfg.neg_two_curves, cfg.labels))
    edges = dot_edges(text)
    assert len(edges) == 8
    deg = [0] * 9
    for a, b in edges:
        deg[int(a)] += 1
        deg[int(b)] += 1
    assert sorted(deg) == [1, 1, 1, 2, 2, 2, 2, 2, 3]
    # chain e1-e2 ... e8-e9 with the branch on its third vertex
    assert deg[2] == 3
    assert export_dot(graph_from_classes(cfg.neg_two_curves, cfg.labels)) == text
