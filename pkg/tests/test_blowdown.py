import random

import numpy as np
import pytest

from quasielliptic import registry as R
from quasielliptic import verify as V
from quasielliptic.blowdown import (
    ContractionError, ContractionState, Presentation, apply_matrix, contract, enumerate_blowdowns, fixes_canonical,
    match_up_to_f_permutation, preserves_form, presentation_of, relabel_diagram,
)
from quasielliptic.graph import graph_automorphisms
from quasielliptic.picard import L, canonical_class, e, format_label, pair, parse_label

ALL = list(R.CHAR2_ORDER) + list(R.CHAR3_ORDER)
IDENTITY = [[int(i == j) for j in range(10)] for i in range(10)]


def test_e8_chain_contraction():
    G = V.config_graph("E8~")
    s = ContractionState.start(G)
    s = contract(s, G.index(e(9)))
    assert s.gram[G.index(parse_label("e8-e9")), G.index(parse_label("e8-e9"))] == -1
    assert not s.gram[G.index(e(9))].any()


def test_double_edge_blocks_the_partner():
    G = V.config_graph("A1~^8")
    s = ContractionState.start(G)
    r1 = G.index(e(2))
    b1 = G.index(parse_label("e1-e2"))
    assert G.gram[r1][b1] == 1
    s = contract(contract(s, r1), b1)
    partner = next(j for j in range(G.n) if G.gram[b1][j] == 2)
    assert s.gram[partner, partner] >= 0


def test_contract_errors():
    G = V.config_graph("E8~")
    s = contract(ContractionState.start(G), G.index(e(9)))
    with pytest.raises(ContractionError):
        contract(s, G.index(e(9)))
    with pytest.raises(ContractionError):
        contract(s, G.index(parse_label("e1-e2")))


@pytest.mark.parametrize("name", ["D4~^2", "A2~+E6~", "A1~^2+D6~"])
def test_contraction_keeps_symmetry(name):
    G = V.config_graph(name)
    rng = random.Random(3)
    for _ in range(20):
        s = ContractionState.start(G)
        while s.contractible():
            r = rng.choice(s.contractible())
            zero_before = int((~s.gram.any(axis=0)).sum())
            s = contract(s, r)
            assert (s.gram == s.gram.T).all()
            assert not s.gram[r].any() and not s.gram[:, r].any()
            assert int((~s.gram.any(axis=0)).sum()) == zero_before + 1


@pytest.mark.parametrize(
    "name", [n if n != "A2~^4" else pytest.param(n, marks=pytest.mark.xfail(
        strict=True, reason="four inequivalent blow-downs found; three published")) for n in ALL]
)
def test_blowdown_counts(name):
    assert len(V.config_classes(name)) == R.CONFIGS[name].blowdown_count


def test_a2_four_classes_pairwise_distinct():
    # recorded count for this surface: four set-orbits, checked pairwise with a coloured isomorphism search
    from quasielliptic.graph import find_isomorphism

    G = V.config_graph("A2~^4")
    classes = V.config_classes("A2~^4")
    assert len(classes) == 4
    reps = [c.representative.vertex_set for c in classes]
    base = G.colors()
    for i in range(4):
        for j in range(i + 1, 4):
            ci = [(c, v in reps[i]) for v, c in enumerate(base)]
            cj = [(c, v in reps[j]) for v, c in enumerate(base)]
            assert find_isomorphism(G.gram, G.gram, ci, cj) is None


@pytest.mark.parametrize("name", ALL)
def test_presentations_are_isometries(name):
    G = V.config_graph(name)
    K = canonical_class()
    for cls in V.config_classes(name):
        pres = presentation_of(cls.representative, G)
        A = pres.matrix_A
        assert preserves_form(A) and fixes_canonical(A)
        fs = pres.exceptional
        assert all(pair(fs[i], fs[j]) == -(i == j) for i in range(9) for j in range(9))
        assert all(pair(f, K) == -1 for f in fs)
        lp = pres.line_class
        assert pair(lp, lp) == 1 and all(pair(lp, f) == 0 for f in fs)
        total = 3 * lp
        for f in fs:
            total = total - f
        assert total == -K
        # A carries the new basis to the standard one
        assert apply_matrix(A, lp) == L and [apply_matrix(A, f) for f in fs] == [e(i) for i in range(1, 10)]


@pytest.mark.parametrize("name", ALL)
def test_standard_blowdown_is_identity(name):
    G = V.config_graph(name)
    first = V.config_classes(name)[0]
    assert presentation_of(first.representative, G).matrix_A == IDENTITY


def test_first_case_second_matrix():
    pres = V.published_presentation("A1~^8", 2)
    printed = [list(r) for r in R.CONFIGS["A1~^8"].matrices[2]]
    assert match_up_to_f_permutation(pres.matrix_A, printed) is not None


def reorder(pres, printed):
    """The computed presentation with its f-classes renumbered to match the printed matrix."""
    sigma = match_up_to_f_permutation(pres.matrix_A, printed)
    assert sigma is not None
    rows = [None] * 10
    for i, row in enumerate(pres.matrix_A):
        rows[sigma[i]] = row
    fs = [None] * 9
    for i, f in enumerate(pres.exceptional, 1):
        fs[sigma[i] - 1] = f
    return Presentation(pres.line_class, fs, rows)


@pytest.mark.parametrize("name,k", [("A1~^8", 2), ("D4~^2", 2)])
def test_relabel_examples(name, k):
    entry = R.CONFIGS[name]
    pres = reorder(V.published_presentation(name, k), [list(r) for r in entry.matrices[k]])
    new = relabel_diagram(entry.configuration(), pres)
    assert new.neg_two_curves == [entry.resolve(s) for s in entry.relabeled[k]]
    if name == "A1~^8":
        assert new.labels[:2] == ["l-127", "2l-345689"]
    else:
        assert "2l-123456" in new.labels


def test_identity_relabel_is_unchanged():
    cfg = R.configuration("D8~")
    G = V.config_graph("D8~")
    pres = presentation_of(V.config_classes("D8~")[0].representative, G)
    new = relabel_diagram(cfg, pres)
    assert new.neg_two_curves == cfg.neg_two_curves
    assert new.labels == [format_label(C) for C in cfg.neg_two_curves]


@pytest.mark.parametrize("name", ["D4~^2", "A1~^2+D6~", "A2~+E6~", "A1~+E7~"])
def test_dedup_invariant_under_relabelling_vertices(name):
    G = V.config_graph(name)
    rng = random.Random(5)
    for _ in range(3):
        order = list(range(G.n))
        rng.shuffle(order)
        H = G.permuted(order)
        assert len(enumerate_blowdowns(H, graph_automorphisms(H))) == len(V.config_classes(name))


def test_final_matrices_have_no_negative_entries():
    for name in ("D4~^2", "E8~"):
        for cls in V.config_classes(name):
            assert (cls.representative.final_gram >= 0).all()
            assert len(cls.representative.order) == 9
            assert isinstance(cls.representative.final_gram, np.ndarray)
