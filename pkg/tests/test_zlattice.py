from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torblocks.zlattice import (
    LatticeError,
    ZLattice,
    full_lattice,
    hnf,
    kernel,
    member,
    mod2_kernel_lattice,
    quotient,
    zero_lattice,
)

rows_strategy = st.lists(
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    min_size=0, max_size=5)


def brute_membership(rows, v, bound=6):
    # small integer combinations only; enough for the sizes drawn here
    if not rows:
        return not any(v)
    for coeffs in product(range(-bound, bound + 1), repeat=len(rows)):
        got = [sum(c * r[j] for c, r in zip(coeffs, rows))
               for j in range(len(v))]
        if got == list(v):
            return True
    return False


def test_hnf_examples():
    L = hnf([(2, 0), (0, 2)], 2)
    assert L.basis == ((2, 0), (0, 2))
    L = hnf([(1, 1), (1, -1)], 2)
    assert L.basis == ((1, 1), (0, 2))
    assert L.index() == 2
    assert hnf([], 2) == zero_lattice(2)


def test_kernel_examples():
    assert kernel([[2, 4]]).basis == ((2, -1),)
    assert kernel([[1, -1]]).basis == ((1, 1),)
    assert kernel([[0, 0]]) == full_lattice(2)


def test_mod2_kernel():
    L = mod2_kernel_lattice([[1, 0], [0, 1]], 2)
    assert L.basis == ((2, 0), (0, 2))
    L = mod2_kernel_lattice([[1, 1]], 2)
    for v in product(range(-4, 5), repeat=2):
        assert member(L, v) == ((v[0] + v[1]) % 2 == 0)


def test_quotient_examples():
    q = quotient(hnf([(2,)], 1))
    assert q.invariant_factors == (2,)
    assert sorted(q.coset_reps()) == [(0,), (1,)]
    assert q.coset_rep((7,)) == q.coset_rep((-3,))
    q = quotient(full_lattice(3))
    assert q.index == 1 and q.invariant_factors == ()
    assert quotient(zero_lattice(2)).index is None


def test_dimension_checks():
    with pytest.raises(LatticeError):
        hnf([(1, 2, 3)], 2)
    with pytest.raises(LatticeError):
        member(full_lattice(2), (1,))


@settings(max_examples=200, deadline=None)
@given(rows_strategy)
def test_hnf_canonical(rows):
    L = hnf(rows, 3)
    # idempotent and generator-order independent
    assert hnf(list(L.basis), 3) == L
    assert hnf(list(reversed(rows)), 3) == L
    # every generator is a member
    for r in rows:
        assert member(L, r)
    # pivots positive, above-pivot entries reduced
    for i, row in enumerate(L.basis):
        piv = next(j for j, x in enumerate(row) if x != 0)
        assert row[piv] > 0
        for above in L.basis[:i]:
            assert 0 <= above[piv] < row[piv]


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                min_size=0, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_membership_against_brute_force(rows, v):
    got = member(hnf(rows, 3), v)
    want = brute_membership(rows, v, bound=8)
    # brute force with bounded coefficients can only miss members that
    # need large coefficients; it never claims a non-member
    if want:
        assert got
    elif not got:
        assert not want


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=1, max_size=3))
def test_kernel_oracle(matrix):
    K = kernel(matrix)
    for v in product(range(-3, 4), repeat=3):
        in_kernel = all(sum(a * b for a, b in zip(row, v)) == 0
                        for row in matrix)
        if member(K, v):
            assert in_kernel
        if in_kernel and all(abs(x) <= 3 for x in v):
            assert member(K, v)


@settings(max_examples=100, deadline=None)
@given(rows_strategy)
def test_quotient_consistency(rows):
    L = hnf(rows, 3)
    q = quotient(L)
    if q.index is None:
        assert not L.is_full_rank()
        return
    assert q.index == L.index()
    reps = q.coset_reps()
    assert len(reps) == q.index
    # representatives are pairwise inequivalent and reduction is stable
    assert len({q.coset_rep(r) for r in reps}) == len(reps)
    for r in reps:
        assert q.coset_rep(r) == r
        shifted = tuple(a + b for a, b in zip(r, L.basis[0]))
        assert q.coset_rep(shifted) == r
