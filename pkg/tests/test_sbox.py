import numpy as np
import pytest

from mersexp import (
    FieldContext,
    bl_inverse,
    catalog_lookup,
    differential_uniformity,
    is_apn,
    kasami_inverse,
    verify_compositional_inverse,
)
from mersexp.sbox import (
    _SMALLEST_IRREDUCIBLE,
    is_irreducible,
    power_map,
    smallest_irreducible,
)


def test_uniformity_examples():
    assert differential_uniformity(3, FieldContext(5)) == 2
    assert differential_uniformity(1, FieldContext(3)) == 8
    assert differential_uniformity(57, FieldContext(7)) == 2
    assert differential_uniformity(73, FieldContext(12)) == 4
    assert differential_uniformity(1, FieldContext(4)) == 16


def test_is_apn_examples():
    assert is_apn(9, FieldContext(7))
    assert not is_apn(1, FieldContext(5))
    assert is_apn(78, FieldContext(7))


def test_compositional_inverse_examples():
    assert verify_compositional_inverse(57, 78, FieldContext(7))
    assert verify_compositional_inverse(1, 1, FieldContext(6))
    assert not verify_compositional_inverse(3, 3, FieldContext(5))


def test_power_map_basics():
    ctx = FieldContext(4)
    squares = power_map(2, ctx)
    assert squares[0] == 0 and squares[1] == 1
    # squaring is a field automorphism: bijective
    assert sorted(squares.tolist()) == list(range(16))
    # x^(2^n - 1) is 1 on every nonzero element
    allones = power_map(ctx.order, ctx)
    assert allones[0] == 0 and set(allones[1:].tolist()) == {1}


def test_counting_symmetry_and_evenness():
    ctx = FieldContext(5)
    for l in (3, 7, 13, 15, 29):
        table = power_map(l, ctx)
        xs = np.arange(ctx.size)
        for a in range(1, ctx.size):
            counts = np.bincount(table ^ table[xs ^ a], minlength=ctx.size)
            assert counts.sum() == ctx.size
            assert (counts % 2 == 0).all()


def test_irreducible_table_entries_are_minimal():
    for n, poly in _SMALLEST_IRREDUCIBLE.items():
        assert is_irreducible(poly, n)
        for cand in range((1 << n) + 1, poly, 2):
            assert not is_irreducible(cand, n)
        assert smallest_irreducible(n) == poly


def test_field_context_validation():
    with pytest.raises(ValueError):
        FieldContext(1)
    with pytest.raises(ValueError):
        FieldContext(25)
    with pytest.raises(ValueError):
        FieldContext(4, 0b10101)  # x^4 + x^2 + 1 = (x^2 + x + 1)^2


def test_env_override_raises_cap(monkeypatch):
    monkeypatch.setenv("MERSEXP_MAX_N", "25")
    ctx = FieldContext(25)
    assert ctx.n == 25
    monkeypatch.delenv("MERSEXP_MAX_N")
    with pytest.raises(ValueError):
        FieldContext(25)


def _second_irreducible(n):
    cand = smallest_irreducible(n) + 2
    while not is_irreducible(cand, n):
        cand += 2
    return cand


def test_uniformity_invariant_under_field_isomorphism():
    for n in (6, 8):
        ctx1 = FieldContext(n)
        ctx2 = FieldContext(n, _second_irreducible(n))
        assert ctx1.reduction_polynomial != ctx2.reduction_polynomial
        for entry in catalog_lookup(n):
            l = entry.exponent.value
            assert differential_uniformity(l, ctx1) == differential_uniformity(
                l, ctx2
            )


def test_catalog_n7():
    entries = catalog_lookup(7)
    by_kind = {}
    for e in entries:
        by_kind.setdefault(e.family.kind, []).append(e)
    assert [e.family.param for e in by_kind["gold"]] == [1, 2, 3]
    assert [e.family.param for e in by_kind["kasami"]] == [2, 3]
    assert by_kind["welch"][0].exponent.value == 11
    assert by_kind["niho"][0].exponent.value == 39
    assert by_kind["inverse"][0].exponent.value == 63
    assert "dobbertin" not in by_kind
    assert all(e.source_table == 1 for e in entries)
    assert all(e.invertible for e in entries)  # n odd


def test_catalog_n4():
    entries = catalog_lookup(4)
    kinds = [e.family.kind for e in entries]
    assert kinds == ["inverse", "bracken_leander"]
    assert entries[0].exponent.value == 14
    assert entries[1].exponent.value == 7
    assert all(e.source_table == 2 for e in entries)


def test_catalog_n12():
    entries = catalog_lookup(12)
    kinds = [e.family.kind for e in entries]
    assert kinds == ["inverse", "bracken_leander"]
    assert entries[1].exponent.value == 73


def test_catalog_n6():
    entries = catalog_lookup(6)
    assert [(e.family.kind, e.exponent.value) for e in entries] == [
        ("gold", 5),
        ("kasami", 13),
        ("inverse", 62),
    ]


def test_catalog_n2_trivial():
    entries = catalog_lookup(2)
    assert [e.family.kind for e in entries] == ["inverse"]


def test_catalog_claims_hold_empirically_small_n():
    for n in (4, 5, 6):
        ctx = FieldContext(n)
        for e in catalog_lookup(n):
            assert (
                differential_uniformity(e.exponent.value, ctx)
                == e.claimed_uniformity
            )
            assert e.exponent.value.bit_count() == e.claimed_degree


def test_apn_invariance_of_closed_form_inverses():
    ctx = FieldContext(7)
    for r in (2, 3):
        inv = kasami_inverse(r, 7).inverse.value
        assert is_apn(inv, ctx)
    ctx12 = FieldContext(12)
    assert differential_uniformity(bl_inverse(3).inverse.value, ctx12) == 4
