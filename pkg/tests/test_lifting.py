"""Lifted operator, rank-<=2 kernel searches, and redundancy measures."""

import itertools
import random
from fractions import Fraction

import pytest

from oracles import brute_has_cp
from prframes import (
    CapExceeded,
    Frame,
    NotAFrame,
    S2Witness,
    find_s2_element,
    find_s2_witness,
    has_exact_pr_redundancy,
    is_exact_pr_frame,
    is_phase_retrievable,
    lifted_independent,
    lifted_operator,
    pr_redundancy,
)
from prframes.lifting import lifted_row, sym_pairs, vech


def random_frame(rng, n, N):
    while True:
        vecs = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(N)]
        try:
            return Frame.from_vectors(vecs, dim=n)
        except NotAFrame:
            continue


def test_lifted_row_represents_quadratic():
    # row dotted with vech(x, y) must equal <f,x>^2 - <f,y>^2
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(2, 4)
        f = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        x = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        y = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        row = lifted_row(f, n)
        coords = vech(x, y, n)
        lhs = sum(a * b for a, b in zip(row, coords))
        px = sum(a * b for a, b in zip(f, x))
        py = sum(a * b for a, b in zip(f, y))
        assert lhs == px * px - py * py


def test_sym_pairs_order():
    assert sym_pairs(3) == [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]


def test_lifted_operator_shape():
    f = Frame.from_vectors([(1, 0), (0, 1), (1, 1)], dim=2)
    sys = lifted_operator(f)
    assert sys.matrix.rows == 3 and sys.matrix.cols == 3
    assert lifted_independent(f)
    assert sys.kernel_dim == 0


def test_lifted_dependence_beyond_dimension():
    f = Frame.from_vectors([(1, 0), (0, 1), (1, 1), (1, -1)], dim=2)
    assert not lifted_independent(f)


def test_witness_predicate():
    f = Frame.from_vectors([(1, 0), (0, 1), (1, 1)], dim=2)
    w = S2Witness((Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1)), 2)
    assert w.validate(f, [0, 1])
    assert not w.validate(f, [0, 1, 2])
    trivial = S2Witness((Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)))
    assert not trivial.is_nonzero()


@pytest.mark.parametrize("seed", range(60))
def test_s2_kernel_empty_iff_cp(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    N = rng.randint(n, 7)
    f = random_frame(rng, n, N)
    w = find_s2_element(f, range(f.N))
    assert (w is None) == brute_has_cp(f)
    if w is not None:
        assert w.validate(f, range(f.N))


@pytest.mark.parametrize("seed", range(40))
def test_witness_search_consistent_with_subfamily_pr(seed):
    # a witness for a co-singleton exists iff dropping that vector changes
    # the rank-<=2 kernel part; cross-checked against the CP decision of the
    # reduced family when the full frame is PR
    rng = random.Random(500 + seed)
    n = rng.randint(2, 3)
    N = rng.randint(n + 1, 6)
    f = random_frame(rng, n, N)
    if not is_phase_retrievable(f):
        return
    for i in range(f.N):
        lam = [j for j in range(f.N) if j != i]
        w = find_s2_witness(f, lam)
        reduced = Frame.from_vectors([f.vectors[j] for j in lam], dim=n)
        reduced_pr = brute_has_cp(reduced)
        assert (w is not None) == (not reduced_pr)
        if w is not None:
            assert w.validate(f, lam)
            assert w.differing_index == i


def test_witness_search_rejects_improper_subsets():
    f = Frame.from_vectors([(1, 0), (0, 1), (1, 1)], dim=2)
    with pytest.raises(ValueError):
        find_s2_witness(f, [])
    with pytest.raises(ValueError):
        find_s2_witness(f, [0, 1, 2])
    with pytest.raises(ValueError):
        find_s2_element(f, [])


def test_exact_redundancy_of_bases():
    # dropping any basis vector admits a rank-one kernel element on its axis
    for n in range(1, 5):
        basis = Frame.from_vectors(
            [tuple(int(i == j) for i in range(n)) for j in range(n)], dim=n
        )
        assert has_exact_pr_redundancy(basis)


def test_redundancy_values():
    f = Frame.from_vectors([(1, 0), (0, 1), (1, 1), (1, -1)], dim=2)
    assert pr_redundancy(f) == Fraction(4, 3)
    exact = Frame.from_vectors([(1, 0), (0, 1), (1, 1)], dim=2)
    assert pr_redundancy(exact) == 1
    assert has_exact_pr_redundancy(exact)


def test_redundancy_cap():
    vecs = [tuple(int(i == j % 3) for i in range(3)) for j in range(17)]
    f = Frame.from_vectors(vecs, dim=3)
    with pytest.raises(CapExceeded):
        pr_redundancy(f)


def test_redundancy_agrees_with_subset_scan():
    # independent re-derivation: smallest preserving subfamily by definition
    rng = random.Random(42)
    for _ in range(10):
        n = rng.randint(2, 3)
        N = rng.randint(n + 1, 5)
        f = random_frame(rng, n, N)
        got = pr_redundancy(f)
        best = f.N
        found = False
        for k in range(1, f.N):
            for lam in itertools.combinations(range(f.N), k):
                if find_s2_witness(f, lam) is None:
                    best = k
                    found = True
                    break
            if found:
                break
        assert got == Fraction(f.N, best)


def test_exactness_and_redundancy_agree_for_pr_frames():
    rng = random.Random(13)
    checked = 0
    while checked < 15:
        n = rng.randint(2, 3)
        N = rng.randint(2 * n - 1, n * (n + 1) // 2)
        f = random_frame(rng, n, N)
        if not is_phase_retrievable(f):
            continue
        checked += 1
        assert has_exact_pr_redundancy(f) == is_exact_pr_frame(f).exact
