"""Generators for exact PR frames and related certified constructions.

The pattern calculus starts from a fixed 3x6 zero/nonzero mask and grows it
with three steps that add one dimension and n+1, n, or 2 columns.  Chaining
steps reaches every (n, N) with 2n <= N <= n(n+1)/2; length 2n-1 is covered
separately by full-spark rejection sampling.  Free cells are instantiated
with uniform integers and the result is verified exactly; a failed draw (a
measure-zero event at integer scale) is retried with a derived seed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import OutOfRange, PatternViolation, RearrangeFailure, RetriesExhausted
from .frames import Frame, is_exact_pr_frame, is_full_spark, has_complement_property
from .lifting import has_exact_pr_redundancy
from .ratlin import Seed, derive_seed, sample_int_matrix, sample_pattern

DEFAULT_RANGE_MAX = 1 << 16

Cell = Tuple[int, int]


@dataclass(frozen=True)
class PatternMatrix:
    """Zero/nonzero mask with pinned 1-cells (identity block and step glue).

    Structural invariants (checked by :meth:`validate`):

    * contains the full identity as a column submatrix,
    * every non-identity column has at least one zero and two nonzeros,
    * every row has exactly n nonzero cells,
    * for each row i there is a system of distinct representatives: columns
      j_1..j_n with cells (i, j_l) and (l, j_l) both nonzero.
    """

    n: int
    N: int
    mask: Tuple[Tuple[bool, ...], ...]
    ones: frozenset = field(default_factory=frozenset)

    def col_nonzeros(self, j: int) -> List[int]:
        return [i for i in range(self.n) if self.mask[i][j]]

    def identity_columns(self) -> Optional[List[int]]:
        """Column index of e_i for each i, or None if some e_i is missing."""
        out = []
        for i in range(self.n):
            j = next(
                (
                    j
                    for j in range(self.N)
                    if self.col_nonzeros(j) == [i] and (i, j) in self.ones
                ),
                None,
            )
            if j is None:
                return None
            out.append(j)
        return out

    def validate(self) -> None:
        id_cols = self.identity_columns()
        if id_cols is None:
            raise PatternViolation("P1", "identity submatrix missing")
        idset = set(id_cols)
        for j in range(self.N):
            if j in idset:
                continue
            nz = self.col_nonzeros(j)
            if len(nz) < 2 or len(nz) == self.n:
                raise PatternViolation("P2", f"column {j}")
        for i in range(self.n):
            if sum(self.mask[i]) != self.n:
                raise PatternViolation("P3", f"row {i} has {sum(self.mask[i])} nonzeros")
        for i in range(self.n):
            if not self._has_sdr(i):
                raise PatternViolation("P4", f"row {i}")

    def _has_sdr(self, i: int) -> bool:
        # rows l must be matched to distinct columns j with mask[i][j] and mask[l][j]
        cand_cols = [j for j in range(self.N) if self.mask[i][j]]
        g = nx.Graph()
        g.add_nodes_from((("r", l) for l in range(self.n)), bipartite=0)
        g.add_nodes_from((("c", j) for j in cand_cols), bipartite=1)
        for l in range(self.n):
            for j in cand_cols:
                if self.mask[l][j]:
                    g.add_edge(("r", l), ("c", j))
        match = nx.algorithms.bipartite.maximum_matching(
            g, top_nodes=[("r", l) for l in range(self.n)]
        )
        return sum(1 for k in match if k[0] == "r") == self.n

    def sdr_for_row(self, i: int) -> Optional[Dict[int, int]]:
        """Row -> column representatives for row i, if a full system exists."""
        cand_cols = [j for j in range(self.N) if self.mask[i][j]]
        g = nx.Graph()
        g.add_nodes_from((("r", l) for l in range(self.n)), bipartite=0)
        g.add_nodes_from((("c", j) for j in cand_cols), bipartite=1)
        for l in range(self.n):
            for j in cand_cols:
                if self.mask[l][j]:
                    g.add_edge(("r", l), ("c", j))
        match = nx.algorithms.bipartite.maximum_matching(
            g, top_nodes=[("r", l) for l in range(self.n)]
        )
        pairs = {k[1]: v[1] for k, v in match.items() if k[0] == "r"}
        return pairs if len(pairs) == self.n else None

    def permute_columns(self, order: Sequence[int]) -> "PatternMatrix":
        inv = {old: new for new, old in enumerate(order)}
        mask = tuple(tuple(row[j] for j in order) for row in self.mask)
        ones = frozenset((i, inv[j]) for i, j in self.ones)
        return PatternMatrix(self.n, self.N, mask, ones)

    def permute_rows(self, order: Sequence[int]) -> "PatternMatrix":
        # relabels coordinates; (P1)-(P4) are invariant under this
        inv = {old: new for new, old in enumerate(order)}
        mask = tuple(self.mask[i] for i in order)
        ones = frozenset((inv[i], j) for i, j in self.ones)
        return PatternMatrix(self.n, self.N, mask, ones)

    def normalized(self) -> "PatternMatrix":
        """Identity columns first (in row order), remaining columns in order."""
        id_cols = self.identity_columns()
        if id_cols is None:
            raise PatternViolation("P1", "identity submatrix missing")
        rest = [j for j in range(self.N) if j not in set(id_cols)]
        return self.permute_columns(list(id_cols) + rest)


@dataclass(frozen=True)
class ConstructionPlan:
    """Derivation path from the 3x6 base mask to a target (n, N)."""

    steps: Tuple[str, ...]  # "base36" followed by "step_I" / "step_II" / "step_III"
    target: Tuple[int, int]

    def replay_shapes(self) -> List[Tuple[int, int]]:
        shapes = [(3, 6)]
        for s in self.steps[1:]:
            n, N = shapes[-1]
            if s == "step_I":
                shapes.append((n + 1, N + n + 1))
            elif s == "step_II":
                shapes.append((n + 1, N + n))
            elif s == "step_III":
                shapes.append((n + 1, N + 2))
            else:
                raise ValueError(f"unknown step {s}")
        return shapes


@dataclass(frozen=True)
class CertifiedFrame:
    """A generated frame together with its verification certificate."""

    frame: Frame
    certificate: Dict


def base_pattern_36() -> PatternMatrix:
    """The 3x6 seed mask: identity block, then three 2-nonzero columns."""
    mask = (
        (True, False, False, True, True, False),
        (False, True, False, True, False, True),
        (False, False, True, False, True, True),
    )
    ones = frozenset({(0, 0), (1, 1), (2, 2)})
    p = PatternMatrix(3, 6, mask, ones)
    p.validate()
    return p


def step_I(a: PatternMatrix) -> PatternMatrix:
    """(n, N) -> (n+1, N+n+1): one fresh free column per old row, plus e_{n+1}."""
    a.validate()
    n, N = a.n, a.N
    rows = []
    for i in range(n):
        new = [False] * (n + 1)
        new[i] = True
        rows.append(tuple(a.mask[i]) + tuple(new))
    last = [False] * N + [True] * n + [True]
    rows.append(tuple(last))
    ones = set(a.ones) | {(n, N + n)}
    b = PatternMatrix(n + 1, N + n + 1, tuple(rows), frozenset(ones)).normalized()
    b.validate()
    return b


def step_II(a: PatternMatrix) -> PatternMatrix:
    """(n, N) -> (n+1, N+n): splice through a column that is 0 in row 1.

    The spliced column must also be nonzero in row 2: the new bottom row's
    representative system is forced to assign it to row 2.  Any non-identity
    column can be brought into this shape by relabeling coordinates (it has
    a zero and two nonzeros), so candidate (column, row-pair) choices are
    searched exhaustively until the assembled pattern validates.
    """
    a.validate()
    n, N = a.n, a.N
    a = a.normalized()
    idset = set(range(n))
    for splice in (j for j in range(N) if j not in idset):
        zeros = [r for r in range(n) if not a.mask[r][splice]]
        nonzeros = [r for r in range(n) if a.mask[r][splice]]
        for r0 in zeros:
            for r1 in nonzeros:
                row_order = [r0, r1] + [r for r in range(n) if r not in (r0, r1)]
                cand = a.permute_rows(row_order).normalized()
                # the splice column index survives only up to renumbering
                sp = next(
                    j
                    for j in range(n, N)
                    if not cand.mask[0][j] and cand.mask[1][j]
                )
                order = [j for j in range(N) if j != sp] + [sp]
                cand = cand.permute_columns(order)
                rows = []
                for i in range(n):
                    ext = [False] * n
                    if i <= 1:
                        ext[0] = True          # column N+1 is free in rows 1 and 2
                    elif i >= 2:
                        ext[i - 1] = True      # column N+i is free in row i+1
                    rows.append(tuple(cand.mask[i]) + tuple(ext))
                last = [False] * (N - 1) + [True] + [True] * (n - 1) + [True]
                rows.append(tuple(last))
                ones = set(cand.ones) | {(n, N + n - 1)}
                try:
                    b = PatternMatrix(n + 1, N + n, tuple(rows), frozenset(ones)).normalized()
                    b.validate()
                except PatternViolation:
                    continue
                return b
    raise RearrangeFailure("no splice column arrangement validates")


def step_III(a: PatternMatrix) -> PatternMatrix:
    """(n, N) -> (n+1, N+2): rearrange so the tail columns chain through row n."""
    a.validate()
    n, N = a.n, a.N
    a = a.normalized()
    idset = set(range(n))
    free_cols = [j for j in range(N) if j not in idset]
    # position N-1 (0-based): zero in row n-1, >=2 nonzeros (P2 grants the latter)
    tail_cands = [j for j in free_cols if not a.mask[n - 1][j]]
    # positions N-1-i need mask[i-1] and mask[n-1] nonzero (1 <= i <= n-1)
    chain_cands = {
        i: [j for j in free_cols if a.mask[i - 1][j] and a.mask[n - 1][j]]
        for i in range(1, n)
    }
    assignment = _assign_tail(tail_cands, chain_cands, n)
    if assignment is None:
        raise RearrangeFailure("no column assignment meets the step III conditions")
    tail_col, chain = assignment
    used = {tail_col} | set(chain.values())
    middle = [j for j in free_cols if j not in used]
    order = (
        list(range(n))
        + middle
        + [chain[i] for i in range(n - 1, 0, -1)]
        + [tail_col]
    )
    a = a.permute_columns(order)
    rows = []
    for i in range(n):
        rows.append(tuple(a.mask[i]) + (True, False))  # column N+1 free in rows 1..n
    last = (
        [False] * (N - n)
        + [True] * n          # row n+1 free under the last n old columns
        + [False, True]
    )
    rows.append(tuple(last))
    ones = set(a.ones) | {(n, N + 1)}
    b = PatternMatrix(n + 1, N + 2, tuple(rows), frozenset(ones)).normalized()
    b.validate()
    return b


def _assign_tail(tail_cands, chain_cands, n):
    """Exhaustive backtracking over distinct columns for the tail positions."""
    slots = sorted(chain_cands, key=lambda i: len(chain_cands[i]))

    def bt(pos, used, acc):
        if pos == len(slots):
            return dict(acc)
        i = slots[pos]
        for j in chain_cands[i]:
            if j in used:
                continue
            used.add(j)
            acc[i] = j
            got = bt(pos + 1, used, acc)
            if got is not None:
                return got
            used.discard(j)
            del acc[i]
        return None

    for tail in tail_cands:
        chain = bt(0, {tail}, {})
        if chain is not None:
            return tail, chain
    return None


_STEP_FNS = {"step_I": step_I, "step_II": step_II, "step_III": step_III}


def plan(n: int, N: int) -> ConstructionPlan:
    """Backward-search a derivation; prefers the smallest-growth step first."""
    if n < 3 or N < 2 * n or N > n * (n + 1) // 2:
        raise OutOfRange(f"no pattern target (n={n}, N={N})")
    steps = _plan_steps(n, N)
    if steps is None:
        raise OutOfRange(f"no derivation path to (n={n}, N={N})")
    return ConstructionPlan(tuple(steps), (n, N))


def _plan_steps(n: int, N: int, _memo={}):
    if not (3 <= n and 2 * n <= N <= n * (n + 1) // 2):
        return None
    if (n, N) in _memo:
        return _memo[(n, N)]
    if (n, N) == (3, 6):
        out = ["base36"]
    else:
        out = None
        for step, prev_N in (
            ("step_III", N - 2),
            ("step_II", N - (n - 1)),
            ("step_I", N - n),
        ):
            prev = _plan_steps(n - 1, prev_N)
            if prev is not None:
                out = prev + [step]
                break
    _memo[(n, N)] = out
    return out


def build_pattern(p: ConstructionPlan) -> PatternMatrix:
    pat = base_pattern_36()
    for step in p.steps[1:]:
        pat = _STEP_FNS[step](pat)
    return pat


def instantiate(
    pat: PatternMatrix, range_max: int, seed: Seed
) -> Frame:
    """Draw the free cells, pin the 1-cells, return the column frame."""
    m = sample_pattern(pat.mask, range_max, seed)
    data = [list(row) for row in m.entries]
    for i, j in pat.ones:
        data[i][j] = Fraction(1)
    return Frame.from_vectors(
        [[data[i][j] for i in range(pat.n)] for j in range(pat.N)]
    )


def generate_exact_pr(
    n: int,
    N: int,
    seed: Seed,
    max_retries: int = 5,
    range_max: int = DEFAULT_RANGE_MAX,
) -> CertifiedFrame:
    """A certified exact PR frame of length N in R^n, any admissible N.

    Length 2n-1 uses full-spark rejection sampling (full spark at minimal
    length is exact); longer frames instantiate a derivation of the pattern
    calculus and are verified with the general exactness checker.
    """
    if n < 1 or N < 2 * n - 1 or N > n * (n + 1) // 2:
        raise OutOfRange(f"exact PR frames require 2n-1 <= N <= n(n+1)/2, got (n={n}, N={N})")
    retries = 0
    if N == 2 * n - 1:
        for attempt in range(max_retries + 1):
            m = sample_int_matrix(n, N, range_max, derive_seed(seed, attempt))
            frame = Frame.from_matrix(m)
            if is_full_spark(frame) and is_exact_pr_frame(frame).exact:
                return CertifiedFrame(
                    frame,
                    {
                        "exact_pr": True,
                        "d": n,
                        "plan": ["full_spark"],
                        "seed": seed,
                        "retries": retries,
                    },
                )
            retries += 1
        raise RetriesExhausted(f"full-spark sampling failed for (n={n}, N={N})")
    p = plan(n, N)
    pat = build_pattern(p)
    for attempt in range(max_retries + 1):
        frame = instantiate(pat, range_max, derive_seed(seed, attempt))
        if is_exact_pr_frame(frame).exact:
            return CertifiedFrame(
                frame,
                {
                    "exact_pr": True,
                    "d": n,
                    "plan": list(p.steps),
                    "seed": seed,
                    "retries": retries,
                },
            )
        retries += 1
    raise RetriesExhausted(f"pattern instantiation failed for (n={n}, N={N})")


def compose_direct_sum(f1: Frame, f2: Optional[Frame]) -> Frame:
    """Embed f1 in the leading and f2 in the trailing coordinates, concatenate."""
    if f2 is None:
        return f1
    k, m = f1.dim, f2.dim
    vecs = [tuple(v) + (Fraction(0),) * m for v in f1.vectors]
    vecs += [(Fraction(0),) * k + tuple(v) for v in f2.vectors]
    return Frame.from_vectors(vecs, dim=k + m)


def _as_identity_leading(cf: CertifiedFrame) -> Frame:
    """Similar frame whose first k vectors are the standard basis.

    Exactness and PR-redundancy are invariant under an invertible change of
    coordinates, so the certificate carries over.
    """
    frame = cf.frame
    k = frame.dim
    lead = frame.matrix.col_submatrix(range(k))
    from .ratlin import nullspace as _ns, rank as _rank  # local to avoid cycle noise

    if _rank(lead) < k:
        raise RetriesExhausted("leading block not invertible")  # not expected: identity/full spark
    inv = _invert(lead)
    new = inv @ frame.matrix
    return Frame.from_matrix(new)


def _invert(m) -> "RatMatrix":
    from .ratlin import RatMatrix

    n = m.rows
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.entries)]
    r = 0
    for c in range(n):
        pr = next(i for i in range(r, n) if work[i][c] != 0)
        work[r], work[pr] = work[pr], work[r]
        pivinv = 1 / work[r][c]
        work[r] = [x * pivinv for x in work[r]]
        for i in range(n):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
    return RatMatrix.from_rows([row[n:] for row in work])


def _redundancy_component(dim: int, length: int, seed: Seed, max_retries: int = 5) -> Frame:
    """A frame for R^dim of the given length with the exact-redundancy property.

    Lengths of at least 2*dim-1 use the exact PR generator.  Shorter lengths
    (down to dim) cannot be phase-retrievable; there a full-spark sample is
    drawn and the redundancy property is verified directly per instance.
    """
    if length >= 2 * dim - 1:
        return generate_exact_pr(dim, length, seed).frame
    if length < dim:
        raise OutOfRange(f"component length {length} below dimension {dim}")
    for attempt in range(max_retries + 1):
        m = sample_int_matrix(dim, length, DEFAULT_RANGE_MAX, derive_seed(seed, 57 + attempt))
        frame = Frame.from_matrix(m)
        if is_full_spark(frame) and has_exact_pr_redundancy(frame):
            return frame
    raise RetriesExhausted(f"short component ({dim}, {length}) failed to certify")


def generate_with_dmax(n: int, k: int, N: int, seed: Seed, max_retries: int = 5) -> CertifiedFrame:
    """A certified frame with largest PR-subspace dimension k and redundancy 1.

    Lengths up to k(k+1)/2 plant an exact PR frame for a k-dimensional slice
    and tilt its tail vectors out of the slice; the slice projection of the
    result is exactly that exact frame, which transfers every removal witness,
    so the slice certificate covers the whole frame.  Longer lengths split
    into a direct sum over complementary slices of two components that each
    carry the exact-redundancy property; both components are exact PR frames
    whenever the length budget allows, and short full-spark components
    (verified per instance) fill the remaining low-length corner.  The value
    of d is always re-computed exactly on the assembled frame.
    """
    from .subspaces import d_max  # deferred: subspaces imports frames only

    lo_k = (n + 1) // 2
    hi_N = k * (k + 1) // 2 + (n - k) * (n - k + 1) // 2
    if not (lo_k <= k <= n):
        raise OutOfRange(f"need [(n+1)/2] <= k <= n, got k={k} for n={n}")
    if not (2 * k - 1 <= N <= hi_N):
        raise OutOfRange(f"need 2k-1 <= N <= {hi_N}, got N={N}")
    if N < n:
        # fewer than n vectors cannot span R^n, so no such frame exists
        raise OutOfRange(f"length {N} cannot be a frame for R^{n}")
    if k == n:
        return generate_exact_pr(n, N, seed)
    n2 = n - k
    last_err = None
    for attempt in range(max_retries + 1):
        s = derive_seed(seed, 211 + attempt)
        try:
            if N <= k * (k + 1) // 2:
                g = _as_identity_leading(generate_exact_pr(k, N, s))
                zeros_tail = (Fraction(0),) * n2
                vecs: List[Tuple[Fraction, ...]] = []
                for j in range(k):
                    vecs.append(tuple(g.vectors[j]) + zeros_tail)
                for j in range(k, n):
                    e = [Fraction(0)] * n2
                    e[j - k] = Fraction(1)
                    vecs.append(tuple(g.vectors[j]) + tuple(e))
                for j in range(n, N):
                    vecs.append(tuple(g.vectors[j]) + zeros_tail)
                frame = Frame.from_vectors(vecs, dim=n)
                mode = ["tilted_slice", N]
            else:
                if N - k * (k + 1) // 2 >= 2 * n2 - 1:
                    n1_len = min(k * (k + 1) // 2, N - (2 * n2 - 1))
                else:
                    # too short for two exact components; shrink to the corner
                    n1_len = min(k * (k + 1) // 2, N - n2)
                n2_len = N - n1_len
                f1 = _redundancy_component(k, n1_len, s)
                f2 = _redundancy_component(n2, n2_len, derive_seed(s, 101))
                frame = compose_direct_sum(f1, f2)
                mode = ["direct_sum", n1_len, n2_len]
        except RetriesExhausted as e:
            last_err = e
            continue
        if d_max(frame) != k:
            last_err = RetriesExhausted(f"d != {k} for the sampled instance")
            continue
        return CertifiedFrame(
            frame,
            {"exact_pr_redundancy": True, "d": k, "plan": mode, "seed": seed, "retries": attempt},
        )
    raise RetriesExhausted(f"generation failed for (n={n}, k={k}, N={N}): {last_err}")


def basis_with_maximal_subspace(n: int, k: int, seed: Seed = 0):
    """A basis of R^n together with a certified maximal k-dim PR subspace.

    Builds the slice M = span{e_1..e_k}, a full-spark (2k-1)-frame for it,
    and tilts basis vectors e_{k+1}..e_{2k-1} into M so the projected basis
    is that frame.  Valid exactly for 1 <= k <= [(n+1)/2].
    """
    from .subspaces import Subspace, is_maximal_pr_subspace, is_pr_subspace

    if not (1 <= k <= (n + 1) // 2):
        raise OutOfRange(f"maximal PR subspaces of a basis need 1 <= k <= [(n+1)/2]")
    phis = _full_spark_fill(k, seed)
    vecs: List[List[Fraction]] = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        if k <= i < 2 * k - 1:
            phi = phis[i - k]
            for t in range(k):
                e[t] += phi[t]
        vecs.append(e)
    basis = Frame.from_vectors(vecs, dim=n)
    m_basis = []
    for t in range(k):
        e = [Fraction(0)] * n
        e[t] = Fraction(1)
        m_basis.append(tuple(e))
    sub = Subspace.from_vectors(m_basis, ambient_dim=n)
    if not is_pr_subspace(basis, sub):
        raise RetriesExhausted("constructed subspace is not PR")  # not expected
    verdict = is_maximal_pr_subspace(basis, sub)
    if verdict.status != "Maximal":
        raise RetriesExhausted("constructed subspace failed the maximality certificate")
    return basis, sub


def _full_spark_fill(k: int, seed: Seed, max_retries: int = 5) -> List[Tuple[Fraction, ...]]:
    """k-1 extra vectors making {e_1..e_k, extras} full spark in R^k."""
    if k == 1:
        return []
    for attempt in range(max_retries + 1):
        m = sample_int_matrix(k, k - 1, DEFAULT_RANGE_MAX, derive_seed(seed, 7 + attempt))
        cand = [tuple(Fraction(x) for x in m.column(j)) for j in range(k - 1)]
        eye = [tuple(Fraction(int(i == t)) for i in range(k)) for t in range(k)]
        if is_full_spark(Frame.from_vectors(eye + cand, dim=k)):
            return cand
    raise RetriesExhausted("full-spark fill failed")
