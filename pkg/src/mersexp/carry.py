"""The modular add-with-carry engine.

Write an exponent as l = sum_j t_j * 2^j with small signed integer
coefficients.  Then s = l * a mod 2^n - 1 holds if and only if there
is a word c of "carries", each in [t_-, t_+ - 1], satisfying

    2*c[i] - c[i-1] + s[i] = sum_j t_j * a[i-j]        (indices mod n)

where a, s are the n-bit expansions and t_+ (t_-) is the sum of the
positive (negative) coefficients.  The carry word is unique when it
exists, so solving the recurrence both decides the congruence and
produces a certificate for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .residues import BitSequence, ExponentFamily

__all__ = [
    "CongruenceError",
    "SignedPowerForm",
    "CarrySequence",
    "CarryReport",
    "signed_form",
    "canonical_form",
    "solve_carries",
    "verify_congruence",
    "carry_constraints_check",
]


class CongruenceError(ValueError):
    """No carry word closes the cycle: s is not l*a mod 2^n - 1."""


@dataclass(frozen=True)
class SignedPowerForm:
    """An exponent written as sum_j t_j * 2^j with signed coefficients.

    terms maps exponent j >= 0 to a nonzero integer coefficient t_j,
    stored sorted by j.  The freedom in choosing a representation is
    the point: kasami exponents get the three-term form with carry
    range {-1, 0, 1} instead of their wide binary expansion.
    """

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a signed power form needs at least one term")
        seen = set()
        for j, t in self.terms:
            if j < 0:
                raise ValueError(f"exponent {j} must be >= 0")
            if t == 0:
                raise ValueError(f"coefficient of 2^{j} must be nonzero")
            if j in seen:
                raise ValueError(f"duplicate exponent {j}")
            seen.add(j)
        if self.t_plus < 1:
            raise ValueError("at least one positive coefficient required")
        if self.value() <= 0:
            raise ValueError("the represented integer must be positive")

    @property
    def t_plus(self) -> int:
        return sum(t for _, t in self.terms if t > 0)

    @property
    def t_minus(self) -> int:
        return sum(t for _, t in self.terms if t < 0)

    def value(self) -> int:
        return sum(t << j for j, t in self.terms)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)


def signed_form(terms: Mapping[int, int]) -> SignedPowerForm:
    """Build a SignedPowerForm from an {exponent: coefficient} mapping."""
    return SignedPowerForm(tuple(sorted(terms.items())))


def canonical_form(f: ExponentFamily) -> SignedPowerForm:
    """The structured low-coefficient form of a supported family.

    gold r            -> 2^r + 1
    kasami r          -> 2^(2r) - 2^r + 1
    bracken_leander r -> 2^(2r) + 2^r + 1
    raw l             -> the plain binary expansion of l
    """
    r = f.param
    if f.kind == "gold":
        return signed_form({r: 1, 0: 1})
    if f.kind == "kasami":
        return signed_form({2 * r: 1, r: -1, 0: 1})
    if f.kind == "bracken_leander":
        return signed_form({2 * r: 1, r: 1, 0: 1})
    if f.kind == "raw":
        return signed_form({j: 1 for j in range(r.bit_length()) if (r >> j) & 1})
    raise ValueError(f"no canonical signed form for family {f.kind!r}")


@dataclass(frozen=True)
class CarrySequence:
    """Length-n word of carries; weight is the plain sum of entries."""

    n: int
    carries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.carries) != self.n:
            raise ValueError(
                f"expected {self.n} carries, got {len(self.carries)}"
            )

    def weight(self) -> int:
        return sum(self.carries)


def _term_sum(form: SignedPowerForm, a: BitSequence, i: int) -> int:
    n = a.n
    return sum(t * a.bits[(i - j) % n] for j, t in form.terms)


def _propagate(
    form: SignedPowerForm, a: BitSequence, s: BitSequence, seed: int
) -> tuple[int, ...] | None:
    """Run c[i] = (c[i-1] - s[i] + sum_j t_j a[i-j]) / 2 around the cycle.

    Returns the carry word when every division is exact, every value
    stays in [t_-, t_+ - 1] and the cycle closes on the seed; None
    otherwise.
    """
    lo, hi = form.t_minus, form.t_plus - 1
    n = a.n
    c_prev = seed
    out = []
    for i in range(n):
        num = c_prev - s.bits[i] + _term_sum(form, a, i)
        if num % 2 != 0:
            return None
        c = num // 2
        if not lo <= c <= hi:
            return None
        out.append(c)
        c_prev = c
    if out[-1] != seed:
        return None
    return tuple(out)


def solve_carries(
    form: SignedPowerForm, a: BitSequence, s: BitSequence
) -> CarrySequence:
    """Find the unique carry word certifying s = l*a mod 2^n - 1.

    Every candidate value of the final carry is seeded in turn; at most
    one closes the cycle.  Raises CongruenceError when none does, which
    is exactly the case s != l*a.
    """
    if a.n != s.n:
        raise ValueError(f"length mismatch: a has {a.n} bits, s has {s.n}")
    solutions = [
        c
        for seed in range(form.t_minus, form.t_plus)
        if (c := _propagate(form, a, s, seed)) is not None
    ]
    if not solutions:
        raise CongruenceError(
            "no carry word closes the cycle: the congruence does not hold"
        )
    if len(solutions) > 1:  # the recurrence admits exactly one solution
        raise RuntimeError("carry uniqueness violated; this is a bug")
    return CarrySequence(a.n, solutions[0])


def verify_congruence(
    form: SignedPowerForm, a: BitSequence, s: BitSequence
) -> CarrySequence:
    """Decide s = l*a mod 2^n - 1 and return the certifying carries.

    Solves the recurrence, then recomputes s from (l, a, c) as a final
    cross-check.  Raises CongruenceError when the congruence fails.
    """
    c = solve_carries(form, a, s)
    n = a.n
    for i in range(n):
        s_i = _term_sum(form, a, i) - 2 * c.carries[i] + c.carries[i - 1]
        if s_i != s.bits[i]:
            raise RuntimeError("carry word does not reproduce s; this is a bug")
    return c


def _is_kasami_form(form: SignedPowerForm, r: int) -> bool:
    return form.as_dict() == {2 * r: 1, r: -1, 0: 1}


@dataclass(frozen=True)
class CarryReport:
    """Constraint checks for a kasami-form carry word.

    pair_bound_ok:    every c[i] + c[i-r] lies in {-1, 0, 1}
    half_weight_ok:   |weight(c)| <= n/2
    weight_identity:  weight(c) + weight(s) = weight(a)
    """

    carry_weight: int
    pair_bound_ok: bool
    half_weight_ok: bool
    weight_identity: bool

    @property
    def all_ok(self) -> bool:
        return self.pair_bound_ok and self.half_weight_ok and self.weight_identity


def carry_constraints_check(
    c: CarrySequence,
    form: SignedPowerForm,
    r: int,
    a: BitSequence,
    s: BitSequence,
) -> CarryReport:
    """Check the extra constraints a kasami carry word must satisfy.

    Requires that c actually solves the recurrence for (form, a, s) and
    that form is the three-term kasami shape with parameter r.
    """
    if not _is_kasami_form(form, r):
        raise ValueError(f"not a kasami form with parameter {r}")
    if solve_carries(form, a, s).carries != c.carries:
        raise ValueError("carry word does not solve the recurrence for (a, s)")
    n = c.n
    w = c.weight()
    pair_ok = all(
        c.carries[i] + c.carries[(i - r) % n] in (-1, 0, 1) for i in range(n)
    )
    return CarryReport(
        carry_weight=w,
        pair_bound_ok=pair_ok,
        half_weight_ok=2 * abs(w) <= n,
        weight_identity=w + s.weight() == a.weight(),
    )
