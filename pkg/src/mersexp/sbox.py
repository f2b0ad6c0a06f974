"""Monomial S-box analysis over small binary fields.

GF(2^n) elements are n-bit integers in a polynomial basis.  Evaluation
of x -> x^l over the whole field goes through discrete-log tables built
once per field context, so the differential-uniformity scan is a flat
pass of xor/bincount work per input difference.

The analysis cap is n <= 24 (memory and time are O(2^n) per table and
O(4^n) for a full uniformity scan); the MERSEXP_MAX_N environment
variable raises the cap for the adventurous.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

import numpy as np

from .residues import ExponentFamily, Residue, family_exponent

__all__ = [
    "FieldContext",
    "CatalogEntry",
    "is_irreducible",
    "smallest_irreducible",
    "power_map",
    "differential_uniformity",
    "is_apn",
    "verify_compositional_inverse",
    "catalog_lookup",
]

_DEFAULT_MAX_N = 24

# Lexicographically smallest irreducible polynomial of each degree,
# encoded as an (n+1)-bit integer.  Frozen; re-derivable from
# smallest_irreducible, which the test suite does.
_SMALLEST_IRREDUCIBLE: dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
    13: 0b10000000011011,
    14: 0b100000000100001,
    15: 0b1000000000000011,
    16: 0b10000000000101011,
    17: 0b100000000000001001,
    18: 0b1000000000000001001,
    19: 0b10000000000000100111,
    20: 0b100000000000000001001,
    21: 0b1000000000000000000101,
    22: 0b10000000000000000000011,
    23: 0b100000000000000000100001,
    24: 0b1000000000000000000011011,
}


def _analysis_cap() -> int:
    raw = os.environ.get("MERSEXP_MAX_N")
    if raw is None:
        return _DEFAULT_MAX_N
    return max(int(raw, 0), _DEFAULT_MAX_N)


def _gf2_mulmod(a: int, b: int, poly: int, n: int) -> int:
    res = 0
    while b:
        if b & 1:
            res ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= poly
    return res


def _gf2_poly_gcd(a: int, b: int) -> int:
    while b:
        while a and a.bit_length() >= b.bit_length():
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def _x_pow_2k(poly: int, n: int, k: int) -> int:
    r = 2  # the basis element x
    for _ in range(k):
        r = _gf2_mulmod(r, r, poly, n)
    return r


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def is_irreducible(poly: int, n: int) -> bool:
    """Irreducibility of a monic degree-n polynomial over GF(2).

    Checks x^(2^n) = x mod poly and, for every prime p dividing n,
    gcd(x^(2^(n/p)) - x, poly) = 1.
    """
    if n < 1 or poly >> n != 1:
        return False
    if _x_pow_2k(poly, n, n) != 2:
        return False
    return all(
        _gf2_poly_gcd(_x_pow_2k(poly, n, n // p) ^ 2, poly) == 1
        for p in _prime_factors(n)
    )


def smallest_irreducible(n: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree n."""
    if n in _SMALLEST_IRREDUCIBLE:
        return _SMALLEST_IRREDUCIBLE[n]
    cand = (1 << n) + 1
    while not is_irreducible(cand, n):
        cand += 2
    return cand


@dataclass(frozen=True)
class FieldContext:
    """GF(2^n) in a polynomial basis with an explicit reduction polynomial.

    The default polynomial is the lexicographically smallest
    irreducible of degree n, which makes results deterministic; any
    other irreducible may be supplied and yields the same differential
    uniformities (the fields are isomorphic).
    """

    n: int
    reduction_polynomial: int = 0

    def __post_init__(self) -> None:
        cap = _analysis_cap()
        if not 2 <= self.n <= cap:
            raise ValueError(
                f"field analysis supports 2 <= n <= {cap}, got {self.n}"
            )
        if self.reduction_polynomial == 0:
            object.__setattr__(
                self, "reduction_polynomial", smallest_irreducible(self.n)
            )
        if not is_irreducible(self.reduction_polynomial, self.n):
            raise ValueError(
                f"0b{self.reduction_polynomial:b} is not a monic irreducible "
                f"of degree {self.n}"
            )

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def order(self) -> int:
        return (1 << self.n) - 1


# exp/log tables per (n, polynomial); immutable once built
_TABLE_CACHE: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}


def _find_generator(ctx: FieldContext) -> int:
    maximal = [ctx.order // p for p in _prime_factors(ctx.order)]
    for g in range(2, ctx.size):
        if all(
            _gf2_powmod(g, m, ctx.reduction_polynomial, ctx.n) != 1
            for m in maximal
        ):
            return g
    raise RuntimeError("no generator found; the field tables are broken")


def _gf2_powmod(a: int, k: int, poly: int, n: int) -> int:
    res = 1
    while k:
        if k & 1:
            res = _gf2_mulmod(res, a, poly, n)
        a = _gf2_mulmod(a, a, poly, n)
        k >>= 1
    return res


def _vec_mul_const(a: np.ndarray, c: int, poly: int, n: int) -> np.ndarray:
    """Elementwise GF(2^n) multiplication of an int64 array by a constant."""
    res = np.zeros_like(a)
    work = a.copy()
    top = 1 << n
    while c:
        if c & 1:
            res ^= work
        c >>= 1
        if c:
            work <<= 1
            np.bitwise_xor(
                work, poly, out=work, where=(work & top).astype(bool)
            )
    return res


def _tables(ctx: FieldContext) -> tuple[np.ndarray, np.ndarray]:
    key = (ctx.n, ctx.reduction_polynomial)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    poly, n, order = ctx.reduction_polynomial, ctx.n, ctx.order
    g = _find_generator(ctx)
    exp = np.empty(order, dtype=np.int64)
    block = min(order, 1 << 12)
    val = 1
    for i in range(block):
        exp[i] = val
        val = _gf2_mulmod(val, g, poly, n)
    step = val  # g^block
    pos = block
    while pos < order:
        cnt = min(block, order - pos)
        exp[pos : pos + cnt] = _vec_mul_const(
            exp[pos - block : pos - block + cnt], step, poly, n
        )
        pos += cnt
    log = np.empty(ctx.size, dtype=np.int64)
    log[0] = -1  # never consulted; x = 0 is special-cased
    log[exp] = np.arange(order, dtype=np.int64)
    _TABLE_CACHE[key] = (exp, log)
    return exp, log


def power_map(l: int, ctx: FieldContext) -> np.ndarray:
    """Full-domain table of x -> x^l over GF(2^n); entry 0 is 0."""
    if l < 1:
        raise ValueError(f"exponent must be positive, got {l}")
    exp, log = _tables(ctx)
    lmod = l % ctx.order
    out = np.empty(ctx.size, dtype=np.int64)
    out[0] = 0
    out[1:] = exp[(log[1:] * lmod) % ctx.order]
    return out


def differential_uniformity(l: int, ctx: FieldContext) -> int:
    """max over a != 0, b of #{x : x^l + (x+a)^l = b} over GF(2^n).

    Always even and at least 2 (x and x + a produce the same output
    difference).
    """
    if not 1 <= l <= ctx.order:
        raise ValueError(f"exponent must be in [1, 2^n - 1], got {l}")
    table = power_map(l, ctx)
    xs = np.arange(ctx.size)
    best = 0
    for a in range(1, ctx.size):
        diffs = table ^ table[xs ^ a]
        best = max(best, int(np.bincount(diffs, minlength=ctx.size).max()))
    return best


def is_apn(l: int, ctx: FieldContext) -> bool:
    """True iff x -> x^l has the least possible differential uniformity 2."""
    return differential_uniformity(l, ctx) == 2


def verify_compositional_inverse(l: int, l_inv: int, ctx: FieldContext) -> bool:
    """Whether x -> x^l_inv undoes x -> x^l on every element of GF(2^n).

    Checked both functionally over the field and as l * l_inv = 1 mod
    2^n - 1; the two views must agree.
    """
    if l < 1 or l_inv < 1:
        raise ValueError("exponents must be positive")
    modular = (l * l_inv) % ctx.order == 1
    composed = power_map(l_inv, ctx)[power_map(l, ctx)]
    functional = bool(np.array_equal(composed, np.arange(ctx.size)))
    if modular != functional:
        raise RuntimeError(
            "field evaluation disagrees with modular arithmetic; "
            "the tables are broken"
        )
    return functional


@dataclass(frozen=True)
class CatalogEntry:
    """One instantiated row of the known-exponent tables.

    source_table 1 lists the known APN exponents on odd-degree fields
    (claimed uniformity 2); source_table 2 the known exponents of
    4-uniform permutations on even-degree fields.
    """

    family: ExponentFamily
    exponent: Residue
    claimed_degree: int
    claimed_uniformity: int
    source_table: int
    invertible: bool


def _entry(fam: ExponentFamily, n: int, degree: int, table: int) -> CatalogEntry:
    exponent = family_exponent(fam, n)
    return CatalogEntry(
        family=fam,
        exponent=exponent,
        claimed_degree=degree,
        claimed_uniformity=2 if table == 1 else 4,
        source_table=table,
        invertible=gcd(exponent.value, (1 << n) - 1) == 1,
    )


def catalog_lookup(n: int) -> list[CatalogEntry]:
    """Instantiate every known-exponent table row applicable at this n.

    Odd n = 2t + 1 draws from the APN table (gold and kasami with
    gcd(r, n) = 1 and r < n/2, welch, niho, the inverse exponent,
    dobbertin when 5 | n); even n = 2t draws from the 4-uniform table
    (gold and kasami with gcd(r, n) = 2 and t odd, the inverse
    exponent, bracken-leander when n = 4r with r odd).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    entries: list[CatalogEntry] = []
    if n % 2 == 1:
        t = n // 2
        for r in range(1, t + 1):
            if gcd(r, n) == 1:
                entries.append(_entry(ExponentFamily.gold(r), n, 2, 1))
        for r in range(2, t + 1):
            if gcd(r, n) == 1:
                entries.append(_entry(ExponentFamily.kasami(r), n, r + 1, 1))
        if t >= 1:
            entries.append(_entry(ExponentFamily.welch(t), n, 3, 1))
            niho_degree = (t + 2) // 2 if t % 2 == 0 else t + 1
            entries.append(_entry(ExponentFamily.niho(t), n, niho_degree, 1))
        entries.append(_entry(ExponentFamily.inverse_exponent(), n, n - 1, 1))
        if n % 5 == 0:
            entries.append(
                _entry(ExponentFamily.dobbertin(n // 5), n, n // 5 + 3, 1)
            )
    else:
        t = n // 2
        if t % 2 == 1:
            for r in range(1, t):
                if gcd(r, n) == 2:
                    entries.append(_entry(ExponentFamily.gold(r), n, 2, 2))
            for r in range(2, t):
                if gcd(r, n) == 2:
                    entries.append(
                        _entry(ExponentFamily.kasami(r), n, r + 1, 2)
                    )
        entries.append(_entry(ExponentFamily.inverse_exponent(), n, n - 1, 2))
        if n % 4 == 0 and (n // 4) % 2 == 1:
            entries.append(
                _entry(ExponentFamily.bracken_leander(n // 4), n, 3, 2)
            )
    return entries
