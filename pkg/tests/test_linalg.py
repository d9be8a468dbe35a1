import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedlie.linalg import (
    DimensionError,
    FieldSpec,
    ResourceGuardError,
    Subspace,
    UnsupportedFieldError,
    canonicalize,
    count_subspaces,
    enumerate_subspaces,
    full_subspace,
    gaussian_binomial,
    join,
    meet,
    member,
    zero_subspace,
)

from conftest import F2, F3, F5, Q, span_by_closure


def test_field_spec_bounds():
    with pytest.raises(ValueError):
        FieldSpec.prime(4)
    with pytest.raises(ValueError):
        FieldSpec.prime(101)
    assert FieldSpec.prime(97).p == 97


def test_canonicalize_examples():
    assert canonicalize(F2, 2, []).rows == ()
    assert canonicalize(F2, 2, [(1, 1), (0, 1)]).rows == ((1, 0), (0, 1))
    assert canonicalize(Q, 2, [(Fraction(1, 2), 1)]).rows == ((1, 2),)


def test_canonicalize_dimension_mismatch():
    with pytest.raises(DimensionError):
        canonicalize(F2, 2, [(1, 0, 1)])


def test_member_examples():
    assert member(zero_subspace(F2, 2), (0, 0))
    assert not member(canonicalize(F2, 2, [(1, 0)]), (0, 1))
    assert member(canonicalize(Q, 2, [(1, 2)]), (2, 4))
    with pytest.raises(DimensionError):
        member(zero_subspace(F2, 2), (0, 0, 0))


def test_join_meet_examples():
    x, y = canonicalize(F2, 2, [(1, 0)]), canonicalize(F2, 2, [(0, 1)])
    full = full_subspace(F2, 2)
    assert join(x, zero_subspace(F2, 2)) == x
    assert join(x, y) == full
    assert join(x, x) == x
    assert meet(x, full) == x
    assert meet(x, y).is_zero()
    assert meet(full, canonicalize(F2, 2, [(1, 1)])) == canonicalize(F2, 2, [(1, 1)])


def test_rational_lowest_terms():
    S = canonicalize(Q, 3, [(Fraction(6, 4), 3, Fraction(-9, 12)), (1, 1, 1)])
    for r in S.rows:
        for a in r:
            assert isinstance(a, Fraction)
            assert a.denominator > 0
            assert Fraction(a.numerator, a.denominator) == a


def test_rational_no_overflow():
    big = 10**40 + 1
    S = canonicalize(Q, 2, [(big, 1), (1, big)])
    assert S.is_full()
    T = canonicalize(Q, 2, [(Fraction(1, big), 1)])
    assert T.rows == ((1, big),)


@pytest.mark.parametrize("p,n,expected", [(2, 1, 2), (2, 3, 16), (5, 3, 64)])
def test_enumeration_examples(p, n, expected):
    assert len(enumerate_subspaces(FieldSpec.prime(p), n)) == expected


def _brute_force_subspace_sets(field, n):
    # every subspace of dim < n is spanned by at most n-1 vectors; add the full space
    vecs = list(itertools.product(range(field.p), repeat=n))
    sets = {span_by_closure(field, [], n), frozenset(vecs)}
    for k in range(1, n):
        for combo in itertools.combinations(vecs, k):
            sets.add(span_by_closure(field, list(combo), n))
    return sets


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3)])
def test_enumeration_counts_match_oracles(p, n):
    field = FieldSpec.prime(p)
    subs = enumerate_subspaces(field, n)
    assert len(subs) == count_subspaces(p, n)
    assert len(set(subs)) == len(subs)
    if p ** n <= 125 and not (p == 5 and n == 3):
        oracle = _brute_force_subspace_sets(field, n)
        got = {span_by_closure(field, list(S.rows), n) for S in subs}
        assert got == oracle


def test_gaussian_binomial_values():
    assert [gaussian_binomial(3, k, 2) for k in range(4)] == [1, 7, 7, 1]
    assert [gaussian_binomial(3, k, 5) for k in range(4)] == [1, 31, 31, 1]
    assert count_subspaces(2, 4) == 67
    assert count_subspaces(3, 3) == 28


def test_enumeration_order_is_by_dimension_then_rows():
    subs = enumerate_subspaces(F3, 3)
    keys = [S.sort_key() for S in subs]
    assert keys == sorted(keys)
    assert [S.dim for S in subs] == sorted(S.dim for S in subs)


def test_enumeration_guards():
    with pytest.raises(UnsupportedFieldError):
        enumerate_subspaces(Q, 2)
    with pytest.raises(ResourceGuardError):
        enumerate_subspaces(F2, 7)


def _rref_invariants(S: Subspace):
    pivots = S.pivots
    assert list(pivots) == sorted(set(pivots))
    for r, pc in zip(S.rows, pivots):
        assert r[pc] == 1
        for other in S.rows:
            if other is not r:
                assert other[pc] == 0


def vectors(p, n):
    return st.tuples(*[st.integers(0, p - 1)] * n)


def subspaces(p, n):
    return st.lists(vectors(p, n), max_size=n + 1).map(lambda g: canonicalize(FieldSpec.prime(p), n, g))


@given(st.sampled_from([2, 3]).flatmap(lambda p: st.tuples(subspaces(p, 4), subspaces(p, 4), subspaces(p, 4))))
@settings(max_examples=150, deadline=None)
def test_lattice_laws(triple):
    S, T, U = triple
    for X in triple:
        _rref_invariants(X)
        assert canonicalize(X.field, X.ambient_dim, X.rows) == X
    assert join(S, T) == join(T, S)
    assert meet(S, T) == meet(T, S)
    assert join(join(S, T), U) == join(S, join(T, U))
    assert meet(meet(S, T), U) == meet(S, meet(T, U))
    assert join(S, meet(S, T)) == S
    assert meet(S, join(S, T)) == S
    assert join(S, T).dim + meet(S, T).dim == S.dim + T.dim


@pytest.mark.parametrize("k", [1, 2, 3])
def test_modular_dimension_law_exhaustive(k):
    subs = enumerate_subspaces(F2, k)
    for S in subs:
        for T in subs:
            assert join(S, T).dim + meet(S, T).dim == S.dim + T.dim


@given(st.lists(st.tuples(*[st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100)] * 3), max_size=4))
@settings(max_examples=100, deadline=None)
def test_rational_canonical_form(gens):
    S = canonicalize(Q, 3, gens)
    _rref_invariants(S)
    assert canonicalize(Q, 3, S.rows) == S
    for g in gens:
        assert member(S, g)
