import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projtorsor.subspace_lattice import (
    ProjectiveSpace,
    Subspace,
    all_subspaces,
    annihilator,
    dim_formula_holds,
    incident,
    indexed_lattice,
    join,
    meet,
    span,
    zero,
)


def test_span_examples():
    assert span(2, 3, [(1, 0, 0)]).rank == 1
    assert span(5, 3, [(1, 0, 0), (2, 0, 0)]).rank == 1
    assert span(3, 3, []).rank == 0


def test_meet_join_examples():
    A = span(2, 3, [(1, 0, 0), (0, 1, 0)])
    B = span(2, 3, [(0, 1, 0), (0, 0, 1)])
    assert meet(A, B) == span(2, 3, [(0, 1, 0)])
    assert meet(A, A) == A and meet(A, zero(2, 3)) == zero(2, 3)
    C, D = span(3, 3, [(1, 0, 0)]), span(3, 3, [(0, 1, 0)])
    assert join(C, D) == span(3, 3, [(1, 0, 0), (0, 1, 0)])
    assert join(C, C) == C and join(C, zero(3, 3)) == C


def test_point_counts():
    assert len(ProjectiveSpace(2, 3).points()) == 7
    assert len(ProjectiveSpace(3, 3).points()) == 13
    assert len(ProjectiveSpace(3, 3).hyperplanes()) == 13
    assert incident(span(2, 3, [(1, 0, 0)]), span(2, 3, [(1, 0, 0), (0, 1, 0)]))


def test_subspace_count_gf2_3():
    # 1 + 7 + 7 + 1
    assert len(all_subspaces(2, 3)) == 16


def test_json_roundtrip():
    for S in all_subspaces(3, 3):
        assert Subspace.from_json(S.to_json()) == S


def test_meet_by_enumeration():
    subs = all_subspaces(2, 3)
    for A, B in itertools.product(subs, subs):
        both = set(A.vectors()) & set(B.vectors())
        assert set(meet(A, B).vectors()) == both
        assert dim_formula_holds(A, B)


def test_annihilator_is_involution():
    for S in all_subspaces(3, 3):
        assert annihilator(annihilator(S)) == S
        assert annihilator(S).rank == 3 - S.rank


def test_indexed_tables_agree():
    L = indexed_lattice(2, 3)
    for i, A in enumerate(L.subspaces):
        for j, B in enumerate(L.subspaces):
            assert L.subspaces[L.join(i, j)] == join(A, B)
            assert L.subspaces[L.meet(i, j)] == meet(A, B)


vecs = st.lists(st.tuples(*[st.integers(0, 4)] * 3), max_size=3)


@settings(max_examples=200, deadline=None)
@given(vecs, vecs, vecs)
def test_modular_law(u, v, w):
    A, B, C = (span(5, 3, x) for x in (u, v, w))
    if incident(A, C):
        assert join(A, meet(B, C)) == meet(join(A, B), C)
    assert meet(A, join(A, B)) == A
    assert join(A, meet(A, B)) == A


def test_bad_modulus_and_ambient():
    with pytest.raises(ValueError):
        span(4, 3, [(1, 0, 0)])
    with pytest.raises(ValueError):
        join(span(2, 3, [(1, 0, 0)]), span(3, 3, [(1, 0, 0)]))
