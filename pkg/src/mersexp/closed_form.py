"""Closed-form inverses of gold, kasami and bracken-leander exponents.

Every constructor assembles the inverse's r-matrix from fixed periodic
column blocks selected by a handful of derived parameters:

    d = gcd(r, n),  m = n/d,
    e = least positive residue of the inverse of r/d mod m,
    s, t from m = s*e + t (0 <= t < e),  k = e // 6,  u = t // 6.

The kasami dispatch runs: m even first; then reflection to n - r when
e is even (the two inverses differ by the cyclotomic shift -2r, so one
of the pair always has odd e); then m divisible by 3; then d = 1; then
the general odd-m case.  Each assembled value is re-verified against
the ring before it is returned, and ships with the r-matrices of the
inverse and of its certifying carry word.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .carry import canonical_form, solve_carries
from .orderings import RMatrix, e_value, matrix_of_sequence, to_r_matrix
from .residues import (
    ExponentFamily,
    NotInvertibleError,
    Residue,
    binary_weight,
    ext_euclid_inverse,
    family_exponent,
    fold_mod,
    mul_mod,
    to_bits,
)

__all__ = [
    "InverseResult",
    "gold_invertible",
    "gold_inverse",
    "kasami_invertible",
    "kasami_inverse",
    "bl_inverse",
    "kasami_degree_bounds",
    "kasami_five_d_structure",
    "weight_two_classification",
]


@dataclass(frozen=True)
class InverseResult:
    """A constructed inverse with its certificates.

    weight equals the binary weight of the inverse and the dispatched
    case's weight formula; carry_matrix re-solves the add-with-carry
    recurrence for s = 1, so the result is independently checkable.
    """

    inverse: Residue
    weight: int
    case_label: str
    r_matrix: RMatrix
    carry_matrix: RMatrix
    warnings: tuple[str, ...] = ()


def _reduce_r(r: int, n: int, warnings: list[str]) -> int:
    if r < 1:
        raise ValueError(f"family parameter must be positive, got {r}")
    if r >= n:
        reduced = r % n
        warnings.append(f"parameter r={r} reduced to {reduced} mod n={n}")
        if reduced == 0:
            raise ValueError(f"r={r} is a multiple of n={n}")
        return reduced
    return r


def _assemble(rows: list[list[int]], n: int, r: int) -> int:
    """Value of the binary r-matrix: sum of 2^((i - j*r) mod n) over ones."""
    value = 0
    for i, row in enumerate(rows):
        for j, bit in enumerate(row):
            if bit:
                value += 1 << ((i - j * r) % n)
    return fold_mod(value, n)


def _certified(
    family: ExponentFamily,
    r: int,
    n: int,
    value: int,
    label: str,
    weight: int,
    warnings: list[str],
) -> InverseResult:
    inv = Residue(n, value)
    if mul_mod(family_exponent(family, n), inv).value != 1:
        raise RuntimeError(
            f"internal consistency failure: {label} at r={r}, n={n} "
            "does not invert its exponent"
        )
    if binary_weight(inv) != weight:
        raise RuntimeError(
            f"internal consistency failure: {label} at r={r}, n={n} "
            f"has weight {binary_weight(inv)}, formula says {weight}"
        )
    bits = to_bits(inv)
    carries = solve_carries(
        canonical_form(family), bits, to_bits(Residue(n, 1))
    )
    return InverseResult(
        inverse=inv,
        weight=weight,
        case_label=label,
        r_matrix=to_r_matrix(bits, r),
        carry_matrix=matrix_of_sequence(carries.carries, n, r),
        warnings=tuple(warnings),
    )


# ---------------------------------------------------------------------------
# gold exponents 2^r + 1
# ---------------------------------------------------------------------------

def gold_invertible(r: int, n: int) -> bool:
    """2^r + 1 is invertible mod 2^n - 1 iff n / gcd(n, r) is odd."""
    d = gcd(r % n, n)
    return (n // d) % 2 == 1


def gold_inverse(r: int, n: int) -> InverseResult:
    """Inverse of 2^r + 1 mod 2^n - 1, weight (n - d + 2) / 2.

    The r-matrix has d - 1 identical rows with ones at even columns
    >= 2 and a last row with ones at column 0 and the odd columns; for
    d = 1 the single row gives sum(2^(2*i*r), i = 0 .. (n-1)/2).
    """
    warnings: list[str] = []
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    r = _reduce_r(r, n, warnings)
    if not gold_invertible(r, n):
        raise NotInvertibleError(
            f"2^{r} + 1 is not invertible mod 2^{n} - 1 (n/gcd even)"
        )
    d = gcd(r, n)
    m = n // d
    top = [1 if (j >= 2 and j % 2 == 0) else 0 for j in range(m)]
    bottom = [1 if (j == 0 or j % 2 == 1) else 0 for j in range(m)]
    rows = [top] * (d - 1) + [bottom]
    label = "GOLD_GCD1" if d == 1 else "GOLD_GCDS"
    return _certified(
        ExponentFamily.gold(r),
        r,
        n,
        _assemble(rows, n, r),
        label,
        (n - d + 2) // 2,
        warnings,
    )


# ---------------------------------------------------------------------------
# kasami exponents 2^(2r) - 2^r + 1
# ---------------------------------------------------------------------------

def kasami_invertible(r: int, n: int) -> bool:
    """Invertibility of 2^(2r) - 2^r + 1 mod 2^n - 1.

    Holds iff n / gcd(r, n) is odd, or it is even while r is even and
    gcd(r, n) = gcd(3r, n).
    """
    r = r % n
    if r == 0:
        return True
    d = gcd(r, n)
    if (n // d) % 2 == 1:
        return True
    return r % 2 == 0 and d == gcd(3 * r, n)


def _gcd1_sequence(m: int, e: int) -> tuple[list[int], str, int]:
    """Decimated inverse word for gcd(r, m) = 1, m odd, e odd.

    Returns (sequence of length m, case tag, binary weight).  The
    sequence is in r-ordering: the inverse is sum(seq[i] * 2^(-i*r)).
    """
    k, rem = divmod(e, 6)
    if rem == 1:
        seq = [1] + [1, 0] * ((m - e) // 2) + [1, 1, 1, 0, 0, 0] * k
        tag, weight = "E6K1", (m + 1) // 2
    elif rem == 5:
        seq = (
            [0]
            + [0, 1] * ((m - e + 2) // 2)
            + [1, 1]
            + [0, 0, 0, 1, 1, 1] * k
        )
        tag, weight = "E6K5", (m + 1) // 2
    else:  # rem == 3
        s, t = divmod(m, e)
        u = t // 6
        x1 = [0, 0, 0, 1, 1, 1]
        x2 = [0, 1, 1, 1, 0, 0]
        x = [0, 1, 1] + x1 * k + [0, 0, 0] + x2 * k
        y = [0, 0, 0] + x2 * k + [0, 1, 1] + x1 * k
        if t % 6 == 1:
            z = [0, 1] * ((e - 3 - 6 * u) // 2)
            seq = (
                x1 * u
                + y * ((s - 2) // 2)
                + [0, 0, 0]
                + x2 * k
                + [0, 1, 1]
                + x1 * u
                + z
                + [0]
            )
            if seq[0] != 0:
                raise RuntimeError("block layout clash at position 0")
            seq[0] = 1
            tag, weight = "E6K3_T6U1", (m - s + 1) // 2
        elif t % 6 == 2:
            z = [1, 0] * (3 * u)
            seq = (
                [0, 1]
                + x1 * u
                + y * ((s - 1) // 2)
                + [0, 0]
                + z
                + [1]
                + x2 * (k - u)
            )
            tag, weight = "E6K3_T6U2", (m - s) // 2
        elif t % 6 == 4:
            z = [1, 0] * (3 * u)
            seq = (
                [0, 0, 0]
                + x2 * u
                + x * ((s - 1) // 2)
                + [0, 1, 1, 0]
                + z
                + [1, 0, 1, 1, 1]
                + x1 * ((e - 6 * u - 9) // 6)
                + [0]
            )
            tag, weight = "E6K3_T6U4", (m - s) // 2
        else:  # t % 6 == 5
            z = x1 + [0, 1] * ((e - 7 - 6 * u) // 2)
            seq = (
                [0, 1, 1, 0, 0]
                + x2 * u
                + x * ((s - 2) // 2)
                + [0, 1, 1]
                + x1 * k
                + [0]
                + x1 * u
                + z
            )
            tag, weight = "E6K3_T6U5", (m - s + 1) // 2
    if len(seq) != m:
        raise RuntimeError(
            f"{tag} block layout has length {len(seq)}, expected {m}"
        )
    return seq, tag, weight


def _nd3_rows(m: int, e: int, d: int) -> tuple[list[list[int]], str]:
    """Rows for m = n/d divisible by 3 (m = 3 mod 6, e = 1 or 5 mod 6).

    The last row is the gcd = 1 word at modulus m; the other d - 1 rows
    share one six-periodic pattern.
    """
    a2, tag, _ = _gcd1_sequence(m, e)
    k = e // 6
    if e % 6 == 1:
        a1 = (
            [0, 0]
            + [0, 0, 1, 1, 1, 0] * ((m - e - 2) // 6)
            + [0, 0, 0, 1, 1, 1] * k
            + [0]
        )
    else:  # e % 6 == 5
        a1 = (
            [0, 1, 0, 0, 0]
            + [1, 1, 1, 0, 0, 0] * ((m - e - 4) // 6)
            + [1, 1, 0, 0]
            + [0, 1, 1, 1, 0, 0] * k
        )
    if len(a1) != m:
        raise RuntimeError(
            f"ND3 block layout has length {len(a1)}, expected {m}"
        )
    return [a1] * (d - 1) + [a2], f"ND3_{tag}"


def _ndodd_rows(
    m: int, e: int, d: int, n: int
) -> tuple[list[list[int]], str, int]:
    """Rows for m = n/d odd, not divisible by 3, d > 1.

    The first row is the gcd = 1 word at modulus m; the other d - 1
    rows share a pattern picked by (e mod 6, m mod 6) for e = 1, 5 and
    by (e mod 6, t mod 6) for e = 3 mod 6.
    """
    a1, _, _ = _gcd1_sequence(m, e)
    k = e // 6
    s, t = divmod(m, e)
    u = t // 6
    v = m // 6
    x1 = [0, 0, 0, 1, 1, 1]
    x3 = [0, 1, 1, 1, 0, 0]
    y = [0, 0, 0] + x3 * k + [0, 1, 1] + x1 * k
    z = [0, 1, 1] + x1 * k + [0, 0, 0] + x3 * k
    if e % 6 == 1 and m % 6 == 1:
        a2, case = x1 * v + [0], "A"
        weight = (n - d + 2) // 2
    elif e % 6 == 1 and m % 6 == 5:
        a2, case = [1, 1, 0, 0, 0, 1] * v + [1, 1, 0, 0, 0], "B"
        weight = (n - d + 2) // 2
    elif e % 6 == 5 and m % 6 == 1:
        a2, case = [0] + x1 * v, "C"
        weight = (n - d + 2) // 2
    elif e % 6 == 5 and m % 6 == 5:
        a2, case = [0, 1, 1] + x1 * v + [0, 0], "D"
        weight = (n - d + 2) // 2
    elif t % 6 == 1:
        a2, case = x1 * u + y * (s // 2) + [0], "E"
        weight = (n - d * (s + 1) + 2) // 2
    elif t % 6 == 2:
        a2, case = [0, 1] + x1 * u + y * ((s - 1) // 2) + [0, 0, 0] + x3 * k, "F"
        weight = (n - d * (s + 2) + 2) // 2
    elif t % 6 == 4:
        a2, case = (
            [0, 0, 0] + x3 * u + z * ((s - 1) // 2) + [0, 1, 1] + x1 * k + [0],
            "G",
        )
        weight = (n - d * (s + 2) + 2) // 2
    else:  # t % 6 == 5
        a2, case = [0, 1, 1, 0, 0] + x3 * u + z * (s // 2), "H"
        weight = (n - d * (s + 1) + 2) // 2
    if len(a2) != m:
        raise RuntimeError(
            f"NDODD case {case} block layout has length {len(a2)}, expected {m}"
        )
    return [a1] + [a2] * (d - 1), f"NDODD_CASE_{case}", weight


def _ndeven_rows(m: int, d: int) -> tuple[list[list[int]], str]:
    """Rows for m = n/d even (then 3 does not divide m and e is odd).

    After the head row, rows alternate between the two phases of the
    period-2 word, ending on the head row's complement phase.
    """
    if m % 6 == 2:
        a1 = [1, 1] + [1, 1, 0, 0, 0, 1] * ((m - 2) // 6)
        odd_row = [1, 0] * (m // 2)
        even_row = [0, 1] * (m // 2)
        tag = "NDEVEN_6K2"
    else:  # m % 6 == 4
        a1 = [1, 0, 1, 1] + [1, 0, 0, 0, 1, 1] * ((m - 4) // 6)
        odd_row = [0, 1] * (m // 2)
        even_row = [1, 0] * (m // 2)
        tag = "NDEVEN_6K4"
    if len(a1) != m:
        raise RuntimeError(
            f"{tag} block layout has length {len(a1)}, expected {m}"
        )
    rows = [a1] + [odd_row if i % 2 else even_row for i in range(1, d)]
    return rows, tag


def _kasami_closed_form(r: int, n: int) -> tuple[int, str, int]:
    """Dispatch to the closed form; returns (value, case tag, weight)."""
    d = gcd(r, n)
    m = n // d
    e = e_value(r, n)
    if m % 2 == 0:
        rows, tag = _ndeven_rows(m, d)
        return _assemble(rows, n, r), tag, (n + 2) // 2
    if e % 2 == 0:
        # the partner exponent with parameter n - r has odd e; the two
        # inverses differ by the cyclotomic shift -2r
        value, tag, weight = _kasami_closed_form(n - r, n)
        return (
            fold_mod(value << ((-2 * r) % n), n),
            tag + "_REFLECTED",
            weight,
        )
    if m % 3 == 0:
        rows, tag = _nd3_rows(m, e, d)
        return _assemble(rows, n, r), tag, (n - 3 * d + 4) // 2
    if d == 1:
        seq, tag, weight = _gcd1_sequence(n, e)
        return _assemble([seq], n, r), f"GCD1_{tag}", weight
    rows, tag, weight = _ndodd_rows(m, e, d, n)
    return _assemble(rows, n, r), tag, weight


def kasami_inverse(r: int, n: int) -> InverseResult:
    """Inverse of 2^(2r) - 2^r + 1 mod 2^n - 1 by case dispatch."""
    warnings: list[str] = []
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    r = _reduce_r(r, n, warnings)
    if not kasami_invertible(r, n):
        raise NotInvertibleError(
            f"2^{2 * r} - 2^{r} + 1 is not invertible mod 2^{n} - 1"
        )
    value, tag, weight = _kasami_closed_form(r, n)
    return _certified(
        ExponentFamily.kasami(r),
        r,
        n,
        value,
        f"KASAMI_{tag}",
        weight,
        warnings,
    )


# ---------------------------------------------------------------------------
# bracken-leander exponents 2^(2r) + 2^r + 1, n = 4r
# ---------------------------------------------------------------------------

def bl_inverse(r: int) -> InverseResult:
    """Inverse of 2^(2r) + 2^r + 1 mod 2^(4r) - 1 for odd r.

    The r-matrix has head row (1, 1, 1, 0), then alternating all-zero
    and all-one rows of width 4; the weight is 2r + 1 = (n + 2) / 2.
    """
    if r < 1 or r % 2 == 0:
        raise ValueError(f"parameter must be odd and positive, got {r}")
    n = 4 * r
    rows = [[1, 1, 1, 0]] + [
        [0, 0, 0, 0] if i % 2 else [1, 1, 1, 1] for i in range(1, r)
    ]
    return _certified(
        ExponentFamily.bracken_leander(r),
        r,
        n,
        _assemble(rows, n, r),
        "BL",
        2 * r + 1,
        [],
    )


# ---------------------------------------------------------------------------
# weight bounds and special structure
# ---------------------------------------------------------------------------

def kasami_degree_bounds(r: int, n: int) -> tuple[int, int, bool]:
    """Bounds on the weight (= algebraic degree) of the kasami inverse.

    Returns (lower, upper, attained) where lower = upper when the
    weight is pinned exactly: (n + 2)/2 for n/d even, (n - 3d + 4)/2
    when 3 divides n/d.  Otherwise the bounds are (n - d + 3)/3 or
    (n - 2d + 3)/3 by n/d mod 3, against the cap (n - d + 2)/2, and
    the lower bound is attained exactly when the odd representative of
    e equals 3.
    """
    if not kasami_invertible(r, n):
        raise NotInvertibleError(
            f"2^{2 * r} - 2^{r} + 1 is not invertible mod 2^{n} - 1"
        )
    r = r % n
    if r == 0:
        raise ValueError("r must not be a multiple of n")
    d = gcd(r, n)
    m = n // d
    if m % 2 == 0:
        w = (n + 2) // 2
        return w, w, False
    if m % 3 == 0:
        w = (n - 3 * d + 4) // 2
        return w, w, False
    e = e_value(r, n)
    e_odd = e if e % 2 == 1 else m - e
    upper = (n - d + 2) // 2
    lower = (n - d + 3) // 3 if m % 3 == 1 else (n - 2 * d + 3) // 3
    return lower, upper, e_odd == 3


def kasami_five_d_structure(r: int, b: int) -> tuple[int, int]:
    """At n = 5 * (r/b) the kasami inverse is a shifted kasami exponent.

    For b dividing r with gcd(b, 5) = 1 and d = r/b, returns (i, m)
    with inverse(2^(2r) - 2^r + 1) = 2^i * (2^(2m) - 2^m + 1) mod
    2^(5d) - 1, chosen by b mod 5.  The identity is re-verified
    numerically before returning.
    """
    if r < 1 or b < 1:
        raise ValueError("r and b must be positive")
    if r % b != 0:
        raise ValueError(f"b={b} must divide r={r}")
    if gcd(b, 5) != 1:
        raise ValueError(f"b={b} must be coprime to 5")
    d = r // b
    n = 5 * d
    bucket = b % 5
    if bucket == 1:
        shift, m = 2 * d, 2 * d
    elif bucket == 2:
        shift, m = 2 * d, d
    elif bucket == 3:
        shift, m = (2 * (d - r)) % n, d
    else:
        shift, m = (2 * (d - r)) % n, 2 * d
    shift %= n
    kr = family_exponent(ExponentFamily.kasami(r), n)
    expected = ext_euclid_inverse(kr.value, n)
    claimed = fold_mod(
        family_exponent(ExponentFamily.kasami(m), n).value << shift, n
    )
    if claimed != expected.value:
        raise RuntimeError(
            f"internal consistency failure: 2^{shift} * K_{m} != "
            f"K_{r}^-1 mod 2^{n} - 1"
        )
    return shift, m


def weight_two_classification(n: int) -> list[tuple[int, Residue]]:
    """All r < n whose kasami inverse mod 2^n - 1 has binary weight 2.

    Nonempty exactly when 3 divides n: r = n/3 gives 2^(n-1) +
    2^(n/3 - 1) and r = 2n/3 gives 2^(n-1) + 2^(2n/3 - 1).  Requires
    n >= 6; the lone smaller case (n = 5, r = 2) falls outside this
    classification.
    """
    if n < 6:
        raise ValueError(f"classification needs n >= 6, got {n}")
    if n % 3 != 0:
        return []
    third = n // 3
    out: list[tuple[int, Residue]] = []
    for r, value in (
        (third, (1 << (n - 1)) + (1 << (third - 1))),
        (2 * third, (1 << (n - 1)) + (1 << (2 * third - 1))),
    ):
        inv = Residue(n, value)
        if mul_mod(family_exponent(ExponentFamily.kasami(r), n), inv).value != 1:
            raise RuntimeError(
                f"internal consistency failure: weight-2 value at r={r}, n={n}"
            )
        out.append((r, inv))
    return out
