import pytest
from hypothesis import given, strategies as st
from math import gcd

from mersexp import (
    BitSequence,
    ExponentFamily,
    NotInvertibleError,
    Residue,
    binary_weight,
    cyclotomic_canonical,
    cyclotomic_shift,
    ext_euclid_inverse,
    family_exponent,
    fold_mod,
    from_bits,
    mul_mod,
    to_bits,
)


def test_to_bits_matches_expansion():
    # 113 = 2^6 + 2^5 + 2^4 + 2^0, displayed msb-first as 1110001
    assert to_bits(Residue(7, 113)).bits == (1, 0, 0, 0, 1, 1, 1)
    assert to_bits(Residue(4, 0)).bits == (0, 0, 0, 0)
    assert to_bits(Residue(5, 21)).bits == (1, 0, 1, 0, 1)


def test_bits_round_trip():
    for n in range(2, 10):
        for v in range((1 << n) - 1):
            assert from_bits(to_bits(Residue(n, v))).value == v


def test_all_ones_word_rejected():
    with pytest.raises(ValueError):
        BitSequence(4, (1, 1, 1, 1))


def test_residue_canonicality_enforced():
    with pytest.raises(ValueError):
        Residue(4, 15)
    with pytest.raises(ValueError):
        Residue(4, -1)
    with pytest.raises(ValueError):
        Residue(1, 0)


def test_mul_mod_examples():
    assert mul_mod(Residue(7, 9), Residue(7, 113)).value == 1
    assert mul_mod(Residue(6, 17), Residue(6, 1)).value == 17
    assert mul_mod(Residue(5, 13), Residue(5, 12)).value == 1


def test_mul_mod_modulus_mismatch():
    with pytest.raises(ValueError):
        mul_mod(Residue(5, 3), Residue(6, 3))


def test_fold_mod_all_ones_intermediate():
    # 2^n - 1 itself folds to the zero class
    assert fold_mod(15, 4) == 0
    assert fold_mod(31 * 7, 5) == 0


@given(st.integers(2, 24), st.integers(0, 1 << 48))
def test_fold_mod_agrees_with_mod(n, x):
    assert fold_mod(x, n) == x % ((1 << n) - 1)


def test_ext_euclid_examples():
    assert ext_euclid_inverse(13, 5).value == 12
    assert ext_euclid_inverse(1, 9).value == 1
    assert ext_euclid_inverse(2, 4).value == 8


def test_ext_euclid_not_invertible():
    # gcd(3, 15) = 3
    with pytest.raises(NotInvertibleError):
        ext_euclid_inverse(3, 4)


def test_ext_euclid_exhaustive_small():
    for n in range(2, 14):
        m = (1 << n) - 1
        for l in range(1, m):
            if gcd(l, m) == 1:
                assert mul_mod(Residue(n, l), ext_euclid_inverse(l, n)).value == 1
            else:
                with pytest.raises(NotInvertibleError):
                    ext_euclid_inverse(l, n)


@given(st.integers(14, 24), st.data())
def test_ext_euclid_larger_n(n, data):
    l = data.draw(st.integers(1, (1 << n) - 2))
    m = (1 << n) - 1
    if gcd(l, m) == 1:
        assert (l * ext_euclid_inverse(l, n).value) % m == 1
    else:
        with pytest.raises(NotInvertibleError):
            ext_euclid_inverse(l, n)


def test_binary_weight_examples():
    assert binary_weight(Residue(7, 113)) == 4
    assert binary_weight(Residue(9, 0)) == 0
    assert binary_weight(Residue(5, 12)) == 2


def test_cyclotomic_shift_examples():
    assert cyclotomic_shift(Residue(7, 9), 2).value == 36
    assert cyclotomic_shift(Residue(8, 77), 0).value == 77
    assert cyclotomic_shift(Residue(5, 16), 1).value == 1


def test_cyclotomic_shift_negative_index():
    # shifting down by 1 then up by 1 is the identity
    x = Residue(6, 41)
    assert cyclotomic_shift(cyclotomic_shift(x, -1), 1) == x
    assert cyclotomic_shift(x, -1) == cyclotomic_shift(x, 5)


@given(st.integers(2, 20), st.data())
def test_shift_properties(n, data):
    v = data.draw(st.integers(0, (1 << n) - 2))
    i = data.draw(st.integers(-2 * n, 2 * n))
    x = Residue(n, v)
    shifted = cyclotomic_shift(x, i)
    # n-fold composition is the identity; weight is preserved
    assert cyclotomic_shift(shifted, n - (i % n)) == x
    assert binary_weight(shifted) == binary_weight(x)


def test_shift_of_inverse_is_inverse_of_shift():
    for n in (5, 7, 9):
        m = (1 << n) - 1
        for l in range(1, m):
            if gcd(l, m) != 1:
                continue
            inv = ext_euclid_inverse(l, n)
            for i in range(n):
                lhs = ext_euclid_inverse(cyclotomic_shift(Residue(n, l), i).value, n)
                assert lhs == cyclotomic_shift(inv, -i)


def test_cyclotomic_canonical_examples():
    assert cyclotomic_canonical(Residue(7, 36)).value == 9
    assert cyclotomic_canonical(Residue(6, 1)).value == 1
    assert cyclotomic_canonical(Residue(5, 12)).value == 3


def test_family_exponent_examples():
    assert family_exponent(ExponentFamily.kasami(3), 7).value == 57
    assert family_exponent(ExponentFamily.gold(1), 3).value == 3
    assert family_exponent(ExponentFamily.bracken_leander(1), 4).value == 7


def test_family_exponent_more():
    assert family_exponent(ExponentFamily.welch(3), 7).value == 11
    assert family_exponent(ExponentFamily.inverse_exponent(), 7).value == 63
    assert family_exponent(ExponentFamily.inverse_exponent(), 6).value == 62
    assert family_exponent(ExponentFamily.dobbertin(1), 5).value == 29
    assert family_exponent(ExponentFamily.raw(100), 5).value == 100 % 31


def test_family_validation():
    with pytest.raises(ValueError):
        ExponentFamily.gold(0)
    with pytest.raises(ValueError):
        ExponentFamily("nonsense", 1)
