import pytest

from quasielliptic import registry as R
from quasielliptic.curves import (
    FiberError, NotExtremalError, SurfaceConfiguration, check_fibers, enumerate_minus_one_curves,
    inferred_dynkin_label, mordell_weil,
)
from quasielliptic.picard import canonical_class, e, format_label, pair, parse_label

ALL = list(R.CHAR2_ORDER) + list(R.CHAR3_ORDER)


def test_first_case_fibre_pair():
    cfg = SurfaceConfiguration.from_labels(2, "A1~", ["l-127", "2l-345689"])
    (rep,) = check_fibers(cfg)
    assert rep.sum_is_minus_k and rep.multiplicities == [1, 1]
    assert rep.affine_type == "A1~"


def test_e8_marks():
    cfg = R.configuration("E8~")
    (rep,) = check_fibers(cfg)
    assert sorted(rep.multiplicities) == sorted([1, 2, 3, 4, 5, 6, 4, 2, 3])
    # the marks span the kernel of the affine Cartan form
    curves = cfg.neg_two_curves
    for C in curves:
        assert sum(m * pair(C, D) for m, D in zip(rep.multiplicities, curves)) == 0


def test_corrupted_fibre_names_residual():
    cfg = R.configuration("E8~")
    dropped = cfg.neg_two_curves[0]
    mult = cfg.multiplicities[0][0]
    cfg.multiplicities = [[0] + cfg.multiplicities[0][1:]]
    with pytest.raises(FiberError) as err:
        check_fibers(cfg)
    assert err.value.fiber == 0
    assert err.value.residual == mult * dropped
    assert format_label(mult * dropped) in str(err.value)


@pytest.mark.parametrize("name", ALL)
def test_fibres_and_dynkin_labels(name):
    cfg = R.configuration(name)
    assert all(r.sum_is_minus_k for r in check_fibers(cfg))
    assert inferred_dynkin_label(cfg) == cfg.dynkin_label.replace("char3", "")


def test_sections_of_e8():
    for name in ("E8~", "E8~char3"):
        assert enumerate_minus_one_curves(R.configuration(name)) == [e(9)]


def test_sections_of_a2_four():
    secs = enumerate_minus_one_curves(R.configuration("A2~^4"))
    assert secs == [e(i) for i in range(1, 10)]


def test_sections_of_a1_eight():
    labels = {format_label(s) for s in enumerate_minus_one_curves(R.configuration("A1~^8"))}
    assert len(labels) == 16
    assert {"e2", "e4", "e6", "e7", "e9", "l-13", "2l-13589"} <= labels
    assert "l-38" in labels


def test_mordell_weil_examples():
    assert mordell_weil(R.configuration("A1~^8")).invariant_factors == (2, 2, 2, 2)
    assert mordell_weil(R.configuration("E8~")).order == 1
    assert mordell_weil(R.configuration("E8~")).invariant_factors == ()
    mw = mordell_weil(R.configuration("A2~^4"))
    assert (mw.order, mw.invariant_factors) == (9, (3, 3))


@pytest.mark.parametrize("name", ALL)
def test_section_count_equals_group_order(name):
    cfg = R.configuration(name)
    secs = enumerate_minus_one_curves(cfg)
    assert len(secs) == mordell_weil(cfg).order == R.PUBLISHED_MW_ORDERS[name]
    assert all(pair(s, -canonical_class()) == 1 for s in secs)
    assert secs == sorted(secs, key=lambda D: D.sort_key())


@pytest.mark.parametrize("name", ["A1~^8", "D4~^2", "A2~^4"])
def test_sections_stable_under_larger_bound(name):
    cfg = R.configuration(name)
    assert enumerate_minus_one_curves(cfg, 3) == enumerate_minus_one_curves(cfg, 6)


@pytest.mark.parametrize("name", ["A1~^8", "A1~^4+D4~", "A2~^4", "A2~+E6~"])
def test_group_independent_of_zero_section(name):
    cfg = R.configuration(name)
    base = mordell_weil(cfg).invariant_factors
    for s in enumerate_minus_one_curves(cfg):
        assert mordell_weil(cfg, s).invariant_factors == base


def test_bound_below_three_rejected():
    with pytest.raises(ValueError):
        enumerate_minus_one_curves(R.configuration("E8~"), 2)


def test_non_extremal_configuration():
    cfg = SurfaceConfiguration.from_labels(2, "A1~", ["l-127", "2l-345689"])
    with pytest.raises(NotExtremalError):
        mordell_weil(cfg)


def test_zero_section_must_be_minus_one():
    cfg = R.configuration("E8~")
    with pytest.raises(Exception):
        mordell_weil(cfg, parse_label("e8-e9"))
