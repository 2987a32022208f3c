import itertools
import math

import pytest
from hypothesis import given, strategies as st

from sudanlist import FieldCtx, FieldMismatchError, add, find_generator, inv, mul
from sudanlist.field import egcd, is_prime, multiplicative_order


@pytest.mark.parametrize("p, a, b, want", [(7, 5, 4, 2), (2, 1, 1, 0), (31, 30, 1, 0)])
def test_add(p, a, b, want):
    F = FieldCtx(p)
    assert add(F(a), F(b)) == F(want)


@pytest.mark.parametrize("p, a, b, want", [(7, 3, 5, 1), (5, 2, 3, 1), (13, 9, 0, 0)])
def test_mul(p, a, b, want):
    F = FieldCtx(p)
    assert mul(F(a), F(b)) == F(want)


@pytest.mark.parametrize("p, a, want", [(7, 3, 5), (7, 1, 1), (31, 2, 16), (65521, 1, 1)])
def test_inv(p, a, want):
    F = FieldCtx(p)
    assert inv(F(a)) == F(want)


def test_inv_zero():
    with pytest.raises(ZeroDivisionError):
        inv(FieldCtx(7)(0))


def test_mismatched_fields():
    with pytest.raises(FieldMismatchError):
        add(FieldCtx(5)(1), FieldCtx(7)(1))
    with pytest.raises(FieldMismatchError):
        FieldCtx(5).residue(FieldCtx(7)(3))


@pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 65537 * 2, 1 << 17])
def test_bad_modulus(p):
    with pytest.raises(ValueError):
        FieldCtx(p)


def test_canonical_representative():
    F = FieldCtx(7)
    assert F(-1).value == 6
    assert F(15).value == 1
    with pytest.raises(ValueError):
        type(F(0))(9, F)


@pytest.mark.parametrize("p, want", [(7, 3), (2, 1), (5, 2)])
def test_find_generator(p, want):
    F = FieldCtx(p)
    w = find_generator(F)
    assert w == F(want)
    # exhaustive: powers enumerate the multiplicative group
    assert {pow(w.value, i, p) for i in range(1, p)} == set(range(1, p))


@pytest.mark.parametrize("p", [p for p in range(2, 400) if is_prime(p)] + [65521])
def test_generator_order(p):
    F = FieldCtx(p)
    assert multiplicative_order(find_generator(F)) == p - 1


def test_generator_is_smallest():
    for p in [3, 5, 7, 11, 13, 17, 19, 23]:
        w = find_generator(FieldCtx(p)).value
        for smaller in range(1, w):
            assert len({pow(smaller, i, p) for i in range(1, p)}) < p - 1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_field_axioms_exhaustive(p):
    F = FieldCtx(p)
    els = list(F)
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert a + (-a) == F.zero
        if a:
            assert a * inv(a) == F.one
            assert (a * b) / a == b
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@given(st.sampled_from([13, 31, 257, 7919, 65521]), st.integers(), st.integers(), st.integers())
def test_field_axioms_random(p, x, y, z):
    F = FieldCtx(p)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if a:
        assert a * a.inverse() == F.one


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_egcd(a, b):
    g, s, t = egcd(a, b)
    assert s * a + t * b == g
    assert g == math.gcd(a, b)


def test_serialization():
    F = FieldCtx(31)
    assert F.to_json() == 31
    assert str(F(30)) == "30"
