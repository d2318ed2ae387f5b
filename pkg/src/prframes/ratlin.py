"""Exact rational linear algebra and seeded integer sampling.

Everything downstream (complement-property scans, kernel searches, pattern
instantiation) runs on top of this module.  All arithmetic is exact: matrices
hold ``fractions.Fraction`` entries, and the hot paths clear denominators and
work fraction-free on Python integers.  No floating point appears anywhere.

A ``Seed`` is a plain int; the determinism contract is that identical seed and
identical call sequence produce identical outputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

Seed = int

IntVec = Tuple[int, ...]


def parse_rational(s) -> Fraction:
    """Parse a JSON-side rational: "p/q", "k", or a plain int."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    return Fraction(str(s))


def format_rational(x: Fraction):
    """Render a rational for JSON: bare int when integral, else "p/q"."""
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    """Immutable matrix of exact rationals.

    Entries are normalized by Fraction itself (lowest terms, positive
    denominator).  rows >= 1, cols >= 0.
    """

    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 0:
            raise ValueError("need rows >= 1 and cols >= 0")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry shape does not match rows/cols")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data:
            raise ValueError("need at least one row")
        return cls(len(data), len(data[0]), data)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows)))

    def transpose(self) -> "RatMatrix":
        if self.cols == 0:
            raise ValueError("cannot transpose a 0-column matrix")
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> List[Tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def col_submatrix(self, js: Sequence[int]) -> "RatMatrix":
        js = list(js)
        return RatMatrix(
            self.rows, len(js), tuple(tuple(row[j] for j in js) for row in self.entries)
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        data = tuple(
            tuple(
                sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                    Fraction(0))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return RatMatrix(self.rows, other.cols, data)

    def mul_vec(self, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(
            sum((row[k] * v[k] for k in range(self.cols)), Fraction(0)) for row in self.entries
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


# ---------------------------------------------------------------------------
# Fraction-free integer kernels of the elimination routines.
# ---------------------------------------------------------------------------


def _vec_gcd_reduce(v: List[int]) -> List[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return [x // g for x in v]
    return v


def int_row_reduce(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Bring integer rows to an echelon basis (fraction-free, gcd-trimmed).

    Returns a list of independent rows, each with a leading nonzero at a
    strictly increasing column position.  Length of the result is the rank.
    """
    basis: List[List[int]] = []  # kept sorted by pivot column
    pivots: List[int] = []
    for row in rows:
        v = list(row)
        for piv, b in zip(pivots, basis):
            if v[piv]:
                a, c = b[piv], v[piv]
                v = [a * x - c * y for x, y in zip(v, b)]
                v = _vec_gcd_reduce(v)
        # find pivot of the reduced row
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            continue
        # insert keeping pivot order
        pos = next((t for t, p in enumerate(pivots) if p > lead), len(pivots))
        pivots.insert(pos, lead)
        basis.insert(pos, v)
    return basis


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(int_row_reduce(rows))


def int_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> List[IntVec]:
    """Integer basis of {x : rows . x = 0}; exact, denominators cleared."""
    # reduced row echelon form over Fractions, then clear denominators
    work = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis: List[IntVec] = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pi, pc in enumerate(pivots):
            v[pc] = -work[pi][fc]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        iv = _vec_gcd_reduce([int(x * den) for x in v])
        basis.append(tuple(iv))
    return basis


def clear_denominators(vec: Sequence[Fraction]) -> IntVec:
    """Scale a rational vector by a positive rational into a primitive int vector."""
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    iv = [int(x * den) for x in vec]
    return tuple(_vec_gcd_reduce(iv))


def _int_rows(m: RatMatrix) -> List[List[int]]:
    return [list(clear_denominators(row)) for row in m.entries]


# ---------------------------------------------------------------------------
# Public operations on RatMatrix.
# ---------------------------------------------------------------------------


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    return int_rank(_int_rows(m))


def nullspace(m: RatMatrix) -> RatMatrix:
    """Rational basis of {x : Mx = 0}, one column per free variable.

    Returns an m.cols x (m.cols - rank) matrix; zero columns count when the
    kernel is trivial (the result then has 0 columns).
    """
    basis = int_nullspace(_int_rows(m), m.cols)
    ncols = len(basis)
    data = tuple(tuple(Fraction(basis[j][i]) for j in range(ncols)) for i in range(m.cols))
    if m.cols == 0:
        return RatMatrix(1, 0, ((),))
    return RatMatrix(m.cols, ncols, data)


def sample_pattern(
    pattern: Sequence[Sequence[bool]], range_max: int, seed: Seed
) -> RatMatrix:
    """Instantiate a zero/nonzero mask with uniform integers in [1, range_max].

    Entries are 0 exactly where the mask is falsy; elsewhere drawn row-major
    from ``random.Random(seed)``.  Deterministic in the seed.
    """
    if range_max < 2:
        raise ValueError("range_max must be >= 2")
    rng = random.Random(seed)
    data = tuple(
        tuple(Fraction(rng.randint(1, range_max)) if cell else Fraction(0) for cell in row)
        for row in pattern
    )
    return RatMatrix(len(data), len(data[0]) if data else 0, data)


def sample_int_matrix(rows: int, cols: int, range_max: int, seed: Seed) -> RatMatrix:
    """Dense positive-integer matrix, row-major draws from the seeded RNG."""
    return sample_pattern([[True] * cols for _ in range(rows)], range_max, seed)


def derive_seed(seed: Seed, salt: int) -> Seed:
    """Stable 64-bit mix of (seed, salt) for retry chains."""
    x = (seed * 0x9E3779B97F4A7C15 + salt * 0xBF58476D1CE4E5B9 + 1) & 0xFFFFFFFFFFFFFFFF
    x ^= x >> 31
    x = (x * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return x ^ (x >> 29)
