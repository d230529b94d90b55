from math import comb

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from isimplicial import fincat
from isimplicial import sset as S
from isimplicial._util import CapError


def test_standard_counts_are_binomial():
    for n in range(5):
        assert S.standard(n, n).counts() == [comb(n + 1, q + 1) for q in range(n + 1)]


def test_constructions_validate():
    for X in (S.standard(3, 3), S.boundary(3, 3), S.horn(3, 1, 3), S.point(2), S.empty(2),
              S.product(S.standard(1, 3), S.standard(1, 3))):
        assert S.validate(X) == []


def test_product_of_edges_has_two_triangles():
    P = S.product(S.standard(1, 2), S.standard(1, 2))
    assert P.counts() == [4, 5, 2]


def test_simplicial_identities_on_degenerate_simplices():
    X = S.standard(2, 4)
    for q in range(1, 4):
        for s in X.simplices(q):
            for i in range(q + 1):
                for j in range(i + 1, q + 1 if q > 1 else 0):
                    assert X.face(X.face(s, j), i) == X.face(X.face(s, i), j - 1)
                assert X.face(X.degen(s, i), i) == s
                assert X.face(X.degen(s, i), i + 1) == s


def test_nerve_of_z2():
    z2 = fincat.group_category([0, 1], lambda a, b: (a + b) % 2, 0)
    N = S.nerve(z2, 3)
    assert N.counts() == [1, 1, 1, 1]
    assert S.homology(N, 1) == (0, [2])
    assert S.homology(N, 2) == (0, [])
    assert S.is_quasicategory(N, 3)


def test_inner_horn_report_of_a_nerve_has_unique_fillers():
    N = S.nerve(fincat.arrow_category(3), 3)
    r = S.inner_horn_report(N, 3)
    assert r["min_fillers"] == r["max_fillers"] == 1 and r["unfilled"] is None


def test_boundary_is_not_a_quasicategory():
    assert not S.is_quasicategory(S.boundary(2, 2), 2)


def test_horn_check_needs_the_cap():
    with pytest.raises(CapError):
        S.inner_horn_report(S.standard(1, 1), 2)


def test_pushout_collapsing_boundary_gives_a_circle():
    B, D, P = S.boundary(1, 2), S.standard(1, 2), S.point(2)
    g = S.SMap(B, P, {y: (P.nondeg[0][0], (0,)) for y in B.nondeg[0]})
    col = S.pushout(S.inclusion(B, D), g)
    assert col.sset.counts() == [1, 1, 0]
    assert S.homology(col.sset, 1) == (1, [])


def test_identity_is_a_homology_iso_and_point_inclusion_of_boundary_is_not():
    X = S.boundary(2, 3)
    assert S.is_homology_isomorphism(S.identity_map(X), 1)
    v = S.SMap(S.point(3), X, {S.point(3).nondeg[0][0]: (X.nondeg[0][0], (0,))})
    assert not S.is_homology_isomorphism(v, 1)


def _sympy_diag(M):
    if not M or not M[0]:
        return []
    D = smith_normal_form(Matrix(M), domain=ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


small = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(small)
def test_smith_diagonal_matches_sympy(M):
    ours = [abs(x) for x in S.smith_diagonal([row[:] for row in M]) if x]
    theirs = _sympy_diag(M)
    assert len(ours) == len(theirs)
    assert S.invariant_factors(ours) == [x for x in theirs if x != 1]


@settings(max_examples=60, deadline=None)
@given(small)
def test_sparse_and_dense_elimination_agree(M):
    dense = [abs(x) for x in S.smith_diagonal([row[:] for row in M]) if x]
    sparse = [abs(x) for x in S.sparse_smith_diagonal(S._dense_to_sparse(M)) if x]
    assert len(dense) == len(sparse)
    assert S.invariant_factors(dense) == S.invariant_factors(sparse)


def test_nerve_of_z3_has_z3_torsion():
    z3 = fincat.group_category([0, 1, 2], lambda a, b: (a + b) % 3, 0)
    assert S.homology(S.nerve(z3, 3), 1) == (0, [3])
