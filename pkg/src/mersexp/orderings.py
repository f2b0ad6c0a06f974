"""Decimated reorderings of length-n cyclic words.

Two coordinate systems are used throughout the closed-form inverse
constructions:

* the r-ordering, a decimation by -r, defined when gcd(r, n) = 1;
* the d x (n/d) r-matrix with entry (i, j) = a[(i - j*r) mod n],
  d = gcd(n, r), which generalises the r-ordering to any r (with
  d = 1 the single row is exactly the r-ordering).

Rows and columns are indexed from 0.  Both reindexings are weight
preserving permutations of the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .residues import BitSequence

__all__ = [
    "ROrderedSeq",
    "RMatrix",
    "e_value",
    "r_ordering",
    "regular_from_r_ordered",
    "to_r_matrix",
    "matrix_of_sequence",
    "from_r_matrix",
]


def e_value(r: int, n: int) -> int:
    """Least positive residue of the inverse of r/d mod n/d, d = gcd(n, r).

    Drives the case dispatch of the closed forms.  By convention the
    degenerate case n/d = 1 returns 0; callers reject it upstream.
    """
    if r < 1 or n < 1:
        raise ValueError("r and n must be positive")
    d = gcd(r, n)
    m = n // d
    if m == 1:
        return 0
    return pow(r // d, -1, m)


@dataclass(frozen=True)
class ROrderedSeq:
    """Decimation by -r of a length-n word; requires gcd(r, n) = 1.

    Entry k holds the bit at position (-k*r mod n) of the regular word.
    """

    n: int
    r: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if gcd(self.r, self.n) != 1:
            raise ValueError(
                f"r-ordering needs gcd(r, n) = 1, got r={self.r}, n={self.n}"
            )
        if len(self.entries) != self.n:
            raise ValueError(
                f"expected {self.n} entries, got {len(self.entries)}"
            )


def r_ordering(a: BitSequence, r: int) -> ROrderedSeq:
    """Reorder a bit word by decimation with step -r."""
    n = a.n
    return ROrderedSeq(n, r, tuple(a.bits[(-k * r) % n] for k in range(n)))


def regular_from_r_ordered(a: ROrderedSeq) -> BitSequence:
    """Undo the decimation: bit i of the output is entry (-i*e mod n)."""
    n = a.n
    e = e_value(a.r, n)
    return BitSequence(n, tuple(a.entries[(-i * e) % n] for i in range(n)))


@dataclass(frozen=True)
class RMatrix:
    """d x (n/d) reindexing of a length-n word, d = gcd(n, r).

    entries[i][j] is the word's value at position (i - j*r) mod n; this
    correspondence is the single source of truth for indexing.  Entries
    are small integers: bit words use {0, 1}, carry words may also hold
    -1 and 2.
    """

    n: int
    r: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        d = gcd(self.n, self.r)
        if len(self.entries) != d:
            raise ValueError(f"expected {d} rows, got {len(self.entries)}")
        cols = self.n // d
        if any(len(row) != cols for row in self.entries):
            raise ValueError(f"every row must have {cols} entries")

    @property
    def d(self) -> int:
        return gcd(self.n, self.r)

    @property
    def cols(self) -> int:
        return self.n // self.d

    def flatten(self) -> tuple[int, ...]:
        """Back to the regular word: position (i - j*r) mod n per entry."""
        out = [0] * self.n
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                out[(i - j * self.r) % self.n] = v
        return tuple(out)


def matrix_of_sequence(values: Sequence[int], n: int, r: int) -> RMatrix:
    """r-matrix of an arbitrary length-n integer word."""
    if len(values) != n:
        raise ValueError(f"expected {n} values, got {len(values)}")
    d = gcd(n, r)
    cols = n // d
    rows = tuple(
        tuple(values[(i - j * r) % n] for j in range(cols)) for i in range(d)
    )
    return RMatrix(n, r, rows)


def to_r_matrix(a: BitSequence, r: int) -> RMatrix:
    """r-matrix of a bit word."""
    return matrix_of_sequence(a.bits, a.n, r)


def from_r_matrix(m: RMatrix) -> BitSequence:
    """Reassemble the bit word of a binary r-matrix.

    Left inverse of to_r_matrix.  Rejects non-binary entries, and the
    all-ones reassembly is rejected by BitSequence for canonicality.
    """
    if any(v not in (0, 1) for row in m.entries for v in row):
        raise ValueError("matrix entries must be bits")
    return BitSequence(m.n, m.flatten())
