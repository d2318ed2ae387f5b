"""Frame model and the complement-property machinery.

A frame is a spanning family of N rational vectors in R^n.  Over the reals,
phase retrievability is equivalent to the complement property: every index
subset or its complement spans.  The checker here searches partitions with a
pruned depth-first scan (index 0 pinned to the left side, cutting the mirror
half), which enumerates exactly the subsets a plain bitmask loop would but
abandons a branch as soon as one side already spans.  All rank arithmetic is
exact and integer-only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import NotAFrame
from .ratlin import RatMatrix, IntVec, _vec_gcd_reduce, clear_denominators, int_rank

IndexSet = FrozenSet[int]


@dataclass(frozen=True)
class Frame:
    """An ordered spanning family of N rational vectors in R^n.

    The constructor rejects non-spanning input: every criterion in this
    package assumes a frame for the whole space.  Indices are 0-based.
    """

    dim: int
    vectors: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise NotAFrame("ambient dimension must be >= 1")
        if any(len(v) != n for v in self.vectors):
            raise NotAFrame("vector length does not match dim")
        if len(self.vectors) < n:
            raise NotAFrame(f"need at least {n} vectors, got {len(self.vectors)}")
        if int_rank([clear_denominators(v) for v in self.vectors]) < n:
            raise NotAFrame("vectors do not span R^n")

    @classmethod
    def from_vectors(cls, vectors: Iterable[Iterable], dim: Optional[int] = None) -> "Frame":
        vecs = tuple(tuple(Fraction(x) for x in v) for v in vectors)
        if not vecs:
            raise NotAFrame("empty vector list")
        return cls(dim if dim is not None else len(vecs[0]), vecs)

    @classmethod
    def from_matrix(cls, m: RatMatrix) -> "Frame":
        """Columns of an n x N matrix become the frame vectors."""
        return cls(m.rows, tuple(m.column(j) for j in range(m.cols)))

    @property
    def N(self) -> int:
        return len(self.vectors)

    @property
    def matrix(self) -> RatMatrix:
        """The n x N column matrix."""
        return RatMatrix(
            self.dim,
            self.N,
            tuple(tuple(v[i] for v in self.vectors) for i in range(self.dim)),
        )

    @cached_property
    def _int_cols(self) -> Tuple[IntVec, ...]:
        # per-vector scaling to primitive integer vectors; rank-neutral
        return tuple(clear_denominators(v) for v in self.vectors)

    def drop(self, i: int) -> Tuple[IntVec, ...]:
        cols = self._int_cols
        return cols[:i] + cols[i + 1 :]


class CPResult(NamedTuple):
    """Outcome of a complement-property check.

    ``failing`` is a subset where neither it nor its complement spans
    (None when the property holds).
    """

    holds: bool
    failing: Optional[IndexSet]


class ExactnessResult(NamedTuple):
    """Outcome of the exact-PR check.

    ``removable`` lists indices whose removal keeps phase retrievability;
    populated only when the frame is PR but not exact.
    """

    exact: bool
    removable: Tuple[int, ...]


# ---------------------------------------------------------------------------
# Echelon-basis helpers on integer columns.
# ---------------------------------------------------------------------------


def _basis_add(basis: List[Tuple[int, List[int]]], vec: Sequence[int]):
    """Reduce vec against an echelon basis; return the new (pivot, row) or None."""
    v = list(vec)
    for piv, b in basis:
        if v[piv]:
            a, c = b[piv], v[piv]
            v = [a * x - c * y for x, y in zip(v, b)]
            v = _vec_gcd_reduce(v)
    lead = next((j for j, x in enumerate(v) if x), None)
    if lead is None:
        return None
    return (lead, v)


def _insert(basis: List[Tuple[int, List[int]]], item) -> List[Tuple[int, List[int]]]:
    out = list(basis)
    pos = next((t for t, (p, _) in enumerate(out) if p > item[0]), len(out))
    out.insert(pos, item)
    return out


def rank_of(cols: Sequence[Sequence[int]]) -> int:
    return int_rank(cols)


def _cp_failing_partition(
    cols: Sequence[IntVec], n: int
) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Find a 2-coloring of the columns with both color classes rank < n.

    Column 0 is pinned to the left class (global swap symmetry), so the scan
    covers every subset containing index 0 exactly once.  A branch dies the
    moment either class reaches full rank, which is what makes the exhaustive
    scan tractable at N ~ 20.
    """
    ncols = len(cols)
    if ncols == 0:
        # the empty family: both classes empty, neither spans (n >= 1)
        return frozenset(), frozenset()
    first = _basis_add([], cols[0])
    start_a: List[Tuple[int, List[int]]] = [] if first is None else [first]
    # stack entries: (next index, basisA, basisB, members of A)
    stack = [(1, start_a, [], [0])]
    while stack:
        i, ba, bb, amembers = stack.pop()
        if len(ba) >= n or len(bb) >= n:
            continue
        if i == ncols:
            a = frozenset(amembers)
            return a, frozenset(range(ncols)) - a
        col = cols[i]
        added_a = _basis_add(ba, col)
        added_b = _basis_add(bb, col)
        # dependent columns stay free; independent ones grow the class basis
        stack.append((i + 1, ba if added_a is None else _insert(ba, added_a), bb, amembers + [i]))
        stack.append((i + 1, ba, bb if added_b is None else _insert(bb, added_b), amembers))
    return None


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def span_dim(frame: Frame, idxs: Iterable[int]) -> int:
    """Rank of the subfamily with the given indices; empty set gives 0."""
    cols = frame._int_cols
    return int_rank([cols[i] for i in idxs])


def has_complement_property(frame: Frame) -> CPResult:
    """Decide the complement property; on failure return one failing subset."""
    hit = _cp_failing_partition(frame._int_cols, frame.dim)
    if hit is None:
        return CPResult(True, None)
    return CPResult(False, hit[0])


def is_phase_retrievable(frame: Frame) -> bool:
    """Real-case phase retrievability: exactly the complement property."""
    return has_complement_property(frame).holds


def spark(frame: Frame) -> int:
    """Size of the smallest linearly dependent subfamily; N+1 if none exists."""
    cols = frame._int_cols
    upper = min(frame.N, frame.dim + 1)
    for s in range(1, upper + 1):
        for combo in itertools.combinations(range(frame.N), s):
            if int_rank([cols[i] for i in combo]) < s:
                return s
    return frame.N + 1


def _removal_failure(cols: Sequence[IntVec], n: int) -> Optional[FrozenSet[int]]:
    """Failing subset for the reduced family, or None if it is still PR.

    Cheap pass first: for each coordinate axis, the columns vanishing on it
    sit inside a hyperplane, so if the remaining columns do not span we are
    done.  The full partition scan only runs when no axis witness exists.
    """
    for r in range(n):
        lam = [j for j, c in enumerate(cols) if c[r] != 0]
        if lam and int_rank([cols[j] for j in lam]) < n:
            comp = [j for j in range(len(cols)) if cols[j][r] == 0]
            if comp:
                return frozenset(lam)
    hit = _cp_failing_partition(cols, n)
    return None if hit is None else hit[0]


def is_exact_pr_frame(frame: Frame) -> ExactnessResult:
    """PR frames that lose PR on every single removal.

    Only single removals are tested: kernels only grow when more vectors are
    dropped, so failing on every co-singleton already fails on every proper
    subset.
    """
    if not is_phase_retrievable(frame):
        return ExactnessResult(False, ())
    removable = tuple(
        i for i in range(frame.N) if _removal_failure(frame.drop(i), frame.dim) is None
    )
    return ExactnessResult(len(removable) == 0, removable)


def is_full_spark(frame: Frame) -> bool:
    return spark(frame) == frame.dim + 1
