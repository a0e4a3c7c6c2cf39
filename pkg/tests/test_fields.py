import pytest
from hypothesis import given, strategies as st

from quasielliptic.fields import FIXED_MODULI, FieldError, field, field_of_order

SUPPORTED = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4)]


def elems(F):
    return st.integers(min_value=0, max_value=F.q - 1)


def test_phi_relation(gf4):
    phi = gf4.gen
    assert gf4.mul(phi, phi) == gf4.add(phi, 1)
    # phi^2 + phi + 1 = 0
    assert gf4.add(gf4.add(gf4.mul(phi, phi), phi), 1) == 0


def test_gf3_sum():
    F = field(3)
    assert F.add(2, 2) == 1


def test_gf9_generator_relation():
    F = field(3, 2)
    g = F.gen
    assert F.mul(g, g) == F.add(g, 1)


def test_format_uses_phi(gf4):
    assert gf4.format(gf4.add(gf4.gen, 1)) == "phi+1"
    assert field(3, 2).format(field(3, 2).gen) == "g"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        field(2, 2).inv(0)


@pytest.mark.parametrize("pn", sorted(FIXED_MODULI))
def test_fixed_moduli_are_primitive(pn):
    F = field(*pn)
    # multiplicative group is cyclic with the residue of t as generator
    seen = set()
    a = 1
    for _ in range(F.q - 1):
        seen.add(a)
        a = F.mul(a, F.gen)
    assert a == 1 and len(seen) == F.q - 1


def test_field_of_order():
    assert field_of_order(27) is field(3, 3)
    with pytest.raises(FieldError):
        field_of_order(6)


@pytest.mark.parametrize("pn", SUPPORTED)
def test_frobenius_is_additive_and_multiplicative(pn):
    F = field(*pn)
    for a in range(F.q):
        for b in range(0, F.q, max(1, F.q // 9)):
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


@pytest.mark.parametrize("small,big", [((2, 1), (2, 2)), ((2, 2), (2, 4)), ((3, 1), (3, 3)), ((2, 3), (2, 6))])
def test_embedding_is_a_ring_map(small, big):
    S, B = field(*small), field(*big)
    emb = B.embedding(S)
    for a in range(S.q):
        for b in range(S.q):
            assert emb[S.add(a, b)] == B.add(emb[a], emb[b])
            assert emb[S.mul(a, b)] == B.mul(emb[a], emb[b])


@pytest.mark.parametrize("pn", SUPPORTED)
def test_field_axioms(pn):
    F = field(*pn)

    @given(elems(F), elems(F), elems(F))
    def check(a, b, c):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(F.add(a, b), b) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.div(F.mul(b, a), a) == b

    check()


@given(st.sampled_from(SUPPORTED), st.data())
def test_sqrt(pn, data):
    F = field(*pn)
    a = data.draw(elems(F))
    r = F.sqrt(F.mul(a, a))
    assert r is not None and F.mul(r, r) == F.mul(a, a)


def test_field_instances_are_shared():
    assert field(3) is field(3, 1) is field(p=3, n=1)
    assert field(2, 2) is field(2, n=2)
