"""Arithmetic in the ring Z_{2^n - 1}.

Elements are kept as canonical least non-negative representatives in
[0, 2^n - 2].  Because 2^n is congruent to 1, reduction folds n-bit
chunks by ordinary addition; multiplication by powers of two is a
cyclic shift of the n-bit expansion.  This module also provides the
extended-Euclid inversion oracle that every closed-form construction
in the package is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "NotInvertibleError",
    "Residue",
    "BitSequence",
    "ExponentFamily",
    "fold_mod",
    "to_bits",
    "from_bits",
    "mul_mod",
    "ext_euclid_inverse",
    "binary_weight",
    "cyclotomic_shift",
    "cyclotomic_canonical",
    "family_exponent",
]


class NotInvertibleError(ValueError):
    """The element shares a factor with 2^n - 1 and has no inverse."""


def fold_mod(x: int, n: int) -> int:
    """Reduce a non-negative integer mod 2^n - 1 by n-bit chunk folding.

    The all-ones intermediate 2^n - 1 folds to 0, so the result is
    always a canonical representative in [0, 2^n - 2].
    """
    if n < 2:
        raise ValueError(f"ring parameter must be >= 2, got {n}")
    if x < 0:
        raise ValueError("fold_mod expects a non-negative integer")
    mask = (1 << n) - 1
    while x > mask:
        x = (x & mask) + (x >> n)
    return 0 if x == mask else x


@dataclass(frozen=True)
class Residue:
    """A canonical element of Z_{2^n - 1}: 0 <= value <= 2^n - 2."""

    n: int
    value: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"ring parameter must be >= 2, got {self.n}")
        if not 0 <= self.value <= (1 << self.n) - 2:
            raise ValueError(
                f"{self.value} is not canonical mod 2^{self.n} - 1"
            )

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class BitSequence:
    """Length-n cyclic binary word; index 0 is the least significant bit.

    The all-ones word is rejected: it denotes 2^n - 1, which is the
    same class as 0, and only the all-zero word represents that class.
    """

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"ring parameter must be >= 2, got {self.n}")
        if len(self.bits) != self.n:
            raise ValueError(
                f"expected {self.n} bits, got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")
        if all(self.bits):
            raise ValueError(
                "all-ones word rejected: 2^n - 1 is the class of 0"
            )

    def weight(self) -> int:
        return sum(self.bits)


def to_bits(x: Residue) -> BitSequence:
    """Binary expansion of a residue, least significant bit first."""
    return BitSequence(x.n, tuple((x.value >> i) & 1 for i in range(x.n)))


def from_bits(b: BitSequence) -> Residue:
    """Residue with the given binary expansion."""
    return Residue(b.n, sum(bit << i for i, bit in enumerate(b.bits)))


def mul_mod(a: Residue, b: Residue) -> Residue:
    """Product in Z_{2^n - 1}; both operands must share the modulus."""
    if a.n != b.n:
        raise ValueError(f"mismatched moduli: 2^{a.n}-1 vs 2^{b.n}-1")
    return Residue(a.n, fold_mod(a.value * b.value, a.n))


def ext_euclid_inverse(l: int, n: int) -> Residue:
    """Inverse of l mod 2^n - 1 by the extended Euclidean algorithm.

    This is the independent oracle: it never consults the closed-form
    constructions.  Raises NotInvertibleError when gcd(l, 2^n - 1) > 1.
    """
    if l < 1:
        raise ValueError(f"need a positive integer, got {l}")
    m = (1 << n) - 1
    old_r, r = l % m, m
    old_s, s = 1, 0
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotInvertibleError(
            f"gcd({l}, 2^{n}-1) = {old_r}, no inverse exists"
        )
    return Residue(n, old_s % m)


def binary_weight(x: Residue) -> int:
    """Number of ones in the binary expansion.

    Equals the algebraic degree of the monomial map t -> t^value over
    GF(2^n).
    """
    return x.value.bit_count()


def cyclotomic_shift(l: Residue, i: int) -> Residue:
    """Multiply by 2^i mod 2^n - 1 (a cyclic shift of the bit word).

    Negative i shifts the other way; i is reduced mod n.
    """
    return Residue(l.n, fold_mod(l.value << (i % l.n), l.n))


def cyclotomic_canonical(l: Residue) -> Residue:
    """Smallest member of {2^i * l mod 2^n - 1 : 0 <= i < n}."""
    best = l.value
    v = l.value
    mask = (1 << l.n) - 1
    for _ in range(l.n - 1):
        v = ((v << 1) | (v >> (l.n - 1))) & mask
        if v < best:
            best = v
    return Residue(l.n, best)


_FAMILY_KINDS = (
    "gold",
    "kasami",
    "bracken_leander",
    "inverse",
    "dobbertin",
    "welch",
    "niho",
    "raw",
)


@dataclass(frozen=True)
class ExponentFamily:
    """A named exponent family with its integer parameter.

    The parameter means: r for gold/kasami/bracken_leander/dobbertin,
    t for welch/niho, the exponent itself for raw.  The inverse family
    takes no parameter.
    """

    kind: str
    param: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind != "inverse" and self.param < 1:
            raise ValueError(
                f"{self.kind} needs a positive parameter, got {self.param}"
            )

    @classmethod
    def gold(cls, r: int) -> "ExponentFamily":
        return cls("gold", r)

    @classmethod
    def kasami(cls, r: int) -> "ExponentFamily":
        return cls("kasami", r)

    @classmethod
    def bracken_leander(cls, r: int) -> "ExponentFamily":
        return cls("bracken_leander", r)

    @classmethod
    def inverse_exponent(cls) -> "ExponentFamily":
        return cls("inverse")

    @classmethod
    def dobbertin(cls, r: int) -> "ExponentFamily":
        return cls("dobbertin", r)

    @classmethod
    def welch(cls, t: int) -> "ExponentFamily":
        return cls("welch", t)

    @classmethod
    def niho(cls, t: int) -> "ExponentFamily":
        return cls("niho", t)

    @classmethod
    def raw(cls, l: int) -> "ExponentFamily":
        return cls("raw", l)


def family_exponent(f: ExponentFamily, n: int) -> Residue:
    """Evaluate the family's defining integer and reduce mod 2^n - 1.

    Pure evaluation: table side conditions (parity, gcd constraints)
    are not enforced here.
    """
    p = f.param
    if f.kind == "gold":
        value = (1 << p) + 1
    elif f.kind == "kasami":
        value = (1 << (2 * p)) - (1 << p) + 1
    elif f.kind == "bracken_leander":
        value = (1 << (2 * p)) + (1 << p) + 1
    elif f.kind == "inverse":
        # 2^(n-1) - 1 for odd n, its shift 2^n - 2 for even n.
        value = (1 << (n - 1)) - 1 if n % 2 else (1 << n) - 2
    elif f.kind == "dobbertin":
        value = (1 << (4 * p)) + (1 << (3 * p)) + (1 << (2 * p)) + (1 << p) - 1
    elif f.kind == "welch":
        value = (1 << p) + 3
    elif f.kind == "niho":
        if p % 2 == 0:
            value = (1 << p) + (1 << (p // 2)) - 1
        else:
            value = (1 << p) + (1 << ((3 * p + 1) // 2)) - 1
    else:  # raw
        value = p
    return Residue(n, fold_mod(value, n))


def is_invertible(l: int, n: int) -> bool:
    """True iff gcd(l, 2^n - 1) = 1."""
    return gcd(l, (1 << n) - 1) == 1
