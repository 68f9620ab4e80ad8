import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ringline import linalg as L
from ringline.field import gf


def rank_mod_p(rows, p):
    """Plain Gaussian elimination mod a prime, independent of the library."""
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def brute_subspace_count(d, r, p):
    seen = set()
    vecs = [v for v in itertools.product(range(p), repeat=d) if any(v)]
    for rows in itertools.combinations(vecs, r):
        if rank_mod_p(rows, p) == r:
            span = frozenset(tuple(sum(c * x for c, x in zip(cs, col)) % p for col in zip(*rows))
                             for cs in itertools.product(range(p), repeat=r))
            seen.add(span)
    return len(seen)


@pytest.mark.parametrize("d,r,p", [(4, 2, 2), (2, 1, 3), (3, 1, 3), (4, 1, 2), (3, 2, 3), (5, 2, 2)])
def test_gaussian_binomial_against_brute_force(d, r, p):
    n = brute_subspace_count(d, r, p)
    assert L.gaussian_binomial(d, r, p) == n
    assert sum(1 for _ in L.enumerate_subspaces(gf(p), d, r)) == n


def test_frozen_counts():
    assert L.gaussian_binomial(4, 2, 2) == 35
    assert L.gaussian_binomial(2, 1, 3) == 4
    assert L.gaussian_binomial(6, 3, 2) == 1395
    subs = list(L.enumerate_subspaces(gf(2), 6, 3))
    assert len(subs) == len(set(subs)) == 1395


@pytest.mark.parametrize("q,d,r", [(4, 3, 1), (4, 4, 2), (3, 4, 2)])
def test_enumeration_no_duplicates(q, d, r):
    subs = list(L.enumerate_subspaces(gf(q), d, r))
    assert len(subs) == len(set(subs)) == L.gaussian_binomial(d, r, q)
    assert all(W.dim == r for W in subs)


def test_basic_spans():
    F = gf(2)
    assert L.span(F, [(1, 0), (0, 1)], 2) == L.full_space(F, 2)
    assert L.span(F, [], 3).is_zero()
    I = L.identity(2)
    diag = L.span(F, list(L.hstack(I, I)), 4)
    assert diag.dim == 2
    U0 = L.span(F, list(L.hstack(I, L.zeros(2, 2))), 4)
    V0 = L.span(F, list(L.hstack(L.zeros(2, 2), I)), 4)
    assert L.is_complementary(U0, V0)
    assert L.is_complementary(diag, U0) and L.is_complementary(diag, V0)
    assert not L.is_complementary(diag, diag)
    assert L.in_G(diag) and not L.in_G(L.span(F, [(1, 0, 0, 0)], 4))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 6), st.data())
def test_rref_properties(q, d, data):
    F = gf(q)
    rows = data.draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * d), max_size=5))
    W = L.span(F, rows, d)
    again = L.span(F, list(W.basis), d)
    assert again == W
    assert all(W.contains_vector(r) for r in rows)
    if F.k == 1 and rows:
        assert W.dim == rank_mod_p(rows, q)
    # increasing pivots with zeros above and below
    piv = W.pivots
    assert list(piv) == sorted(set(piv))
    for i, p in enumerate(piv):
        assert all(W.basis[j][p] == (1 if j == i else 0) for j in range(W.dim))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_dimension_formula(q, data):
    F = gf(q)
    d = 6 if q == 2 else 4
    vec = st.tuples(*[st.integers(0, q - 1)] * d)
    W1 = L.span(F, data.draw(st.lists(vec, max_size=4)), d)
    W2 = L.span(F, data.draw(st.lists(vec, max_size=4)), d)
    S, I = L.sum_and_intersection(W1, W2)
    assert S.dim + I.dim == W1.dim + W2.dim
    assert S.contains(W1) and S.contains(W2) and W1.contains(I) and W2.contains(I)
    assert set(I.vectors()) == set(W1.vectors()) & set(W2.vectors())


def test_self_sum_and_meet():
    F = gf(3)
    W = L.span(F, [(1, 2, 0, 1), (0, 1, 1, 0)], 4)
    assert L.sum_and_intersection(W, W) == (W, W)


@pytest.mark.parametrize("q,d", [(2, 4), (3, 4), (2, 5)])
def test_quotient_lattice_isomorphism(q, d):
    F = gf(q)
    for wdim in range(d + 1):
        W = next(iter(L.enumerate_subspaces(F, d, wdim)))
        qm = L.quotient_space(F, d, W)
        k = d - wdim
        for r in range(wdim, d + 1):
            above = [V for V in L.enumerate_subspaces(F, d, r) if V.contains(W)]
            images = [qm.project(V) for V in above]
            assert all(I.dim == r - wdim for I in images)
            assert len(set(images)) == len(images) == L.gaussian_binomial(k, r - wdim, q)
            assert all(qm.lift(I) == V for I, V in zip(images, above))


def test_quotient_degenerate():
    F = gf(2)
    qm = L.quotient_space(F, 3, L.zero_space(F, 3))
    assert len(qm.section) == 3
    qm = L.quotient_space(F, 3, L.full_space(F, 3))
    assert len(qm.section) == 0


def test_matrix_inverse_round_trip():
    rng = random.Random(5)
    F = gf(9)
    for _ in range(30):
        M = tuple(tuple(rng.randrange(9) for _ in range(3)) for _ in range(3))
        if L.is_invertible_matrix(F, M):
            assert L.mat_mul(F, M, L.mat_inverse(F, M)) == L.identity(3)


def test_points_of():
    F = gf(3)
    W = L.span(F, [(1, 0, 0), (0, 1, 0)], 3)
    assert len(L.points_of(W)) == 4
