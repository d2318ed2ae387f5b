"""Phase-retrievable subspace analytics.

A subspace M is PR with respect to a frame F when the projected family
{P_M f_i} is a PR frame for M.  All tests here run on the coordinate family
{B^T f_i} instead: it differs from the projected coordinates by the
invertible Gram factor (B^T B)^{-1}, so every rank (hence the complement
property) agrees.  d_max(F) is the exact min over index subsets of
max(rank of the subset, rank of the complement); it equals the largest
dimension of any PR subspace.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    CapExceeded,
    NotABasis,
    NotPRSubspace,
    OutOfRange,
    RetriesExhausted,
    SupportTooLarge,
)
from .frames import Frame, _basis_add, _cp_failing_partition, _insert
from .ratlin import (
    IntVec,
    RatMatrix,
    Seed,
    clear_denominators,
    derive_seed,
    int_nullspace,
    int_rank,
    sample_int_matrix,
)

DEFAULT_CAP = 24
DEFAULT_RANGE_MAX = 1 << 16


@dataclass(frozen=True)
class Subspace:
    """A subspace of R^n given by an n x k basis matrix of full column rank.

    Columns produced by the extension algorithm are orthogonal but left
    unnormalized; every criterion used downstream is scale-invariant.
    """

    ambient_dim: int
    basis: RatMatrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise ValueError("basis row count does not match ambient_dim")
        if self.dim < 1:
            raise ValueError("need at least one basis column")
        if int_rank([clear_denominators(self.basis.column(j)) for j in range(self.dim)]) < self.dim:
            raise ValueError("basis columns are dependent")

    @property
    def dim(self) -> int:
        return self.basis.cols

    @classmethod
    def from_vectors(cls, vectors: Iterable[Iterable], ambient_dim: Optional[int] = None) -> "Subspace":
        cols = [tuple(Fraction(x) for x in v) for v in vectors]
        n = ambient_dim if ambient_dim is not None else len(cols[0])
        data = tuple(tuple(col[i] for col in cols) for i in range(n))
        return cls(n, RatMatrix(n, len(cols), data))

    def vectors(self) -> List[Tuple[Fraction, ...]]:
        return self.basis.columns()

    def contains(self, x: Sequence[Fraction]) -> bool:
        cols = [clear_denominators(self.basis.column(j)) for j in range(self.dim)]
        return int_rank(cols + [clear_denominators(tuple(Fraction(v) for v in x))]) == self.dim


class MaximalityVerdict(NamedTuple):
    """Outcome of the maximality ladder.

    status is "Maximal", "NotMaximal", or "Unknown".  NotMaximal carries a
    certified strictly larger PR superspace; Unknown carries the probe report.
    """

    status: str
    reason: Optional[str] = None
    witness: Optional[Subspace] = None
    probe_report: Optional[dict] = None


def project_frame(frame: Frame, sub: Subspace) -> List[Tuple[Fraction, ...]]:
    """Coordinates {B^T f_i}; returned raw because they may fail to span.

    For any index set the rank of these vectors equals the rank of the true
    projected vectors (the coordinate map differs by an invertible factor).
    """
    bt = sub.basis.transpose()
    return [bt.mul_vec(v) for v in frame.vectors]


def _projected_int_cols(frame: Frame, sub: Subspace) -> List[IntVec]:
    return [clear_denominators(v) for v in project_frame(frame, sub)]


def is_pr_subspace(frame: Frame, sub: Subspace) -> bool:
    """True iff the coordinate family spans R^k and has the complement property."""
    if frame.dim != sub.ambient_dim:
        return False
    cols = _projected_int_cols(frame, sub)
    if int_rank(cols) < sub.dim:
        return False
    return _cp_failing_partition(cols, sub.dim) is None


def _partition_within(cols: Sequence[IntVec], t: int) -> bool:
    """Is there a 2-coloring of the columns with both class ranks <= t?

    Same pruned scan as the complement-property search, with the kill
    condition moved from rank n to rank t+1.
    """
    first = _basis_add([], cols[0])
    start_a = [] if first is None else [first]
    stack = [(1, start_a, [])]
    ncols = len(cols)
    while stack:
        i, ba, bb = stack.pop()
        if len(ba) > t or len(bb) > t:
            continue
        if i == ncols:
            return True
        col = cols[i]
        added_a = _basis_add(ba, col)
        added_b = _basis_add(bb, col)
        stack.append((i + 1, ba if added_a is None else _insert(ba, added_a), bb))
        stack.append((i + 1, ba, bb if added_b is None else _insert(bb, added_b)))
    return False


def d_max(frame: Frame, cap: int = DEFAULT_CAP) -> int:
    """Largest dimension of a PR subspace: min over subsets of the larger rank.

    Computed as the smallest threshold t admitting a partition with both
    sides of rank <= t; the complement-property check disposes of t = n first.
    """
    if frame.N > cap:
        raise CapExceeded(f"N={frame.N} exceeds enumeration cap {cap}")
    n = frame.dim
    cols = frame._int_cols
    if _cp_failing_partition(cols, n) is None:
        return n
    for t in range((n + 1) // 2, n):
        if _partition_within(cols, t):
            return t
    return n


def random_pr_subspace(
    frame: Frame,
    ell: int,
    seed: Seed,
    max_retries: int = 5,
    range_max: int = DEFAULT_RANGE_MAX,
) -> Subspace:
    """A certified PR subspace of dimension ell, sampled then verified exactly."""
    d = d_max(frame)
    if not 1 <= ell <= d:
        raise OutOfRange(f"no PR subspace of dimension {ell}: admissible range is 1..{d}")
    n = frame.dim
    for attempt in range(max_retries + 1):
        m = sample_int_matrix(n, ell, range_max, derive_seed(seed, attempt))
        if int_rank([clear_denominators(m.column(j)) for j in range(ell)]) < ell:
            continue
        sub = Subspace(n, m)
        if is_pr_subspace(frame, sub):
            return sub
    raise RetriesExhausted(f"no PR subspace of dimension {ell} found in {max_retries + 1} draws")


def _require_basis(b: Frame) -> None:
    if b.N != b.dim:
        raise NotABasis(f"expected {b.dim} vectors, got {b.N}")


def support(x: Sequence, b: Frame) -> FrozenSet[int]:
    """Dual-basis coordinate support {i : <x, b_i> != 0}; 0-based indices."""
    _require_basis(b)
    xv = tuple(Fraction(v) for v in x)
    return frozenset(
        i
        for i, bi in enumerate(b.vectors)
        if sum((a * c for a, c in zip(xv, bi)), Fraction(0)) != 0
    )


def _coeff_matrix(sub: Subspace, b: Frame) -> List[IntVec]:
    """Rows i of B^T * (basis of M): the dual-basis coordinates of M's basis."""
    bt = b.matrix.transpose()
    prod = bt @ sub.basis
    return [clear_denominators(row) for row in prod.entries]


def min_support(sub: Subspace, b: Frame) -> int:
    """Smallest dual-basis support size over nonzero elements of the subspace.

    A nonzero element supported inside S exists iff the coordinate rows
    outside S drop rank, so supports are scanned in increasing size.
    """
    _require_basis(b)
    if sub.ambient_dim != b.dim:
        raise NotABasis("ambient dimensions differ")
    n, k = sub.ambient_dim, sub.dim
    rows = _coeff_matrix(sub, b)
    for s in range(1, n + 1):
        for supp in itertools.combinations(range(n), s):
            outside = [rows[i] for i in range(n) if i not in supp]
            if int_rank(outside) < k:
                return s
    raise AssertionError("unreachable: the full support always admits a hit")


def _orthogonal_sample(us: Sequence[IntVec], n: int, rng: random.Random, range_max: int) -> Optional[IntVec]:
    """Random integer vector orthogonal to all of us, or None if none exists."""
    basis = int_nullspace(us, n)
    if not basis:
        return None
    coeffs = [rng.randint(1, range_max) for _ in basis]
    v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)]
    return tuple(v)


def _extension_probe(
    frame: Frame, sub: Subspace, budget: int, seed: Seed, range_max: int = DEFAULT_RANGE_MAX
) -> Optional[Subspace]:
    """Try to certify a strictly larger PR subspace containing M."""
    n = sub.ambient_dim
    us = [clear_denominators(sub.basis.column(j)) for j in range(sub.dim)]
    rng = random.Random(derive_seed(seed, 9001))
    for _ in range(budget):
        u = _orthogonal_sample(us, n, rng, range_max)
        if u is None or all(t == 0 for t in u):
            return None
        bigger = Subspace.from_vectors(
            [sub.basis.column(j) for j in range(sub.dim)] + [tuple(Fraction(t) for t in u)],
            ambient_dim=n,
        )
        if is_pr_subspace(frame, bigger):
            return bigger
    return None


def is_maximal_pr_subspace(
    frame: Frame, sub: Subspace, probe_budget: int = 20, seed: Seed = 0
) -> MaximalityVerdict:
    """Decision ladder for maximality of a PR subspace.

    (1) dimension equals d_max: Maximal outright.  (2) frame is a basis:
    minimum support equal to the dimension certifies Maximal; a strictly
    larger minimum support below the [(n+1)/2] ceiling always extends, and
    the verdict carries a verified superspace.  (3) anything else is probed;
    a failed probe is reported as Unknown, never as Maximal.
    """
    if not is_pr_subspace(frame, sub):
        raise NotPRSubspace("subspace is not phase-retrievable w.r.t. the frame")
    k, n = sub.dim, sub.ambient_dim
    try:
        d = d_max(frame)
    except CapExceeded:
        d = None
    if d is not None and k == d:
        return MaximalityVerdict("Maximal", reason=f"dimension equals d_max = {d}")
    if frame.N == frame.dim:
        s = min_support(sub, frame)
        if s == k:
            return MaximalityVerdict("Maximal", reason=f"minimum support {s} equals dimension")
        if s > k and k < (n + 1) // 2:
            witness = _extension_probe(frame, sub, max(probe_budget, 20), seed)
            if witness is None:
                raise RetriesExhausted("extension exists but sampling failed to certify one")
            return MaximalityVerdict(
                "NotMaximal", reason=f"minimum support {s} exceeds dimension", witness=witness
            )
    witness = _extension_probe(frame, sub, probe_budget, seed)
    if witness is not None:
        return MaximalityVerdict("NotMaximal", reason="probe found a larger PR subspace", witness=witness)
    return MaximalityVerdict(
        "Unknown",
        reason="no decision procedure applies",
        probe_report={"attempts": probe_budget, "extension_found": False},
    )


def _stage_accepts(us: List[IntVec], n: int, supp: FrozenSet[int]) -> bool:
    """Every row subset of matching size meeting the support must be invertible."""
    m1 = len(us)
    for lam in itertools.combinations(range(n), m1):
        if not supp.intersection(lam):
            continue
        rows = [tuple(u[i] for u in us) for i in lam]
        if int_rank(rows) < m1:
            return False
    return True


def _solve_transpose(t: RatMatrix, u: Sequence[int]) -> Tuple[Fraction, ...]:
    """v with T^T v = u, by elimination on the augmented system."""
    n = t.rows
    tt = t.transpose()
    work = [list(tt.entries[i]) + [Fraction(u[i])] for i in range(n)]
    for c in range(n):
        pr = next(i for i in range(c, n) if work[i][c] != 0)
        work[c], work[pr] = work[pr], work[c]
        inv = 1 / work[c][c]
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return tuple(work[i][n] for i in range(n))


def extend_to_maximal(
    b: Frame,
    x: Sequence,
    seed: Seed = 0,
    max_retries: int = 5,
    range_max: int = DEFAULT_RANGE_MAX,
) -> Subspace:
    """Grow span{x} into a certified maximal PR subspace w.r.t. the basis b.

    Works in dual-basis coordinates, where the target dimension is the
    support size k of x.  Each stage samples an integer vector orthogonal to
    the ones already kept and accepts it when every square row subset of the
    running size that meets the support is invertible.  The finished subspace
    is re-verified from scratch (PR, minimum support k, Maximal verdict), so
    a bad draw can only cost a retry, never a wrong certificate.
    """
    _require_basis(b)
    n = b.dim
    xv = tuple(Fraction(v) for v in x)
    if len(xv) != n:
        raise OutOfRange("vector length does not match the basis dimension")
    coords = b.matrix.transpose().mul_vec(xv)
    supp = frozenset(i for i, c in enumerate(coords) if c != 0)
    if not supp:
        raise OutOfRange("cannot extend the zero vector")
    k = len(supp)
    if k > (n + 1) // 2:
        raise SupportTooLarge(f"support size {k} exceeds [(n+1)/2] = {(n + 1) // 2}")
    x0 = clear_denominators(coords)
    for attempt in range(max_retries + 1):
        rng = random.Random(derive_seed(seed, 31 + attempt))
        us: List[IntVec] = [x0]
        ok = True
        for _m in range(1, k):
            got = None
            for _ in range(40):
                u = _orthogonal_sample(us, n, rng, range_max)
                if u is None:
                    break
                cand = us + [u]
                if _stage_accepts(cand, n, supp):
                    got = u
                    break
            if got is None:
                ok = False
                break
            us.append(got)
        if not ok:
            continue
        back = [_solve_transpose(b.matrix, u) for u in us]
        sub = Subspace.from_vectors(back, ambient_dim=n)
        if not is_pr_subspace(b, sub):
            continue
        if min_support(sub, b) != k:
            continue
        if is_maximal_pr_subspace(b, sub).status != "Maximal":
            continue
        return sub
    raise RetriesExhausted(f"extension failed after {max_retries + 1} attempts")
