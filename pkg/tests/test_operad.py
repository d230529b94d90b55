from math import comb

import pytest

from isimplicial import idiag, operad
from isimplicial import sset as S
from isimplicial._util import permutations


def test_block_and_sum_permutations():
    assert operad.perm_sum([(1, 0), (0,)]) == (1, 0, 2)
    # block of size 1 moves behind the block of size 2
    assert operad.perm_block((1, 0), [1, 2]) == (2, 0, 1)


def test_com_and_be_satisfy_the_axioms():
    assert operad.validate_operad(operad.commutativity_operad(3, 2)) == []
    assert operad.validate_operad(operad.barratt_eccles(3, 2), max_dim=1) == []
    assert operad.validate_operad(operad.swap_boundary_operad(2)) == []


def test_sabotaged_composition_is_caught():
    BE = operad.barratt_eccles(3, 1)

    def gamma(c, ks, ds):
        out = BE._gamma(c, ks, ds)
        if sum(ks) == 3 and len(ks) == 2:
            verts = S.vertex_sequence(out)
            return S._vertex_sequence_nf(tuple(v[::-1] for v in verts))
        return out
    bad = operad.Operad(BE.spaces, BE._act, BE.unit, gamma, name="bad")
    assert operad.validate_operad(bad, max_dim=1)


def test_sigma_freeness():
    assert operad.is_sigma_free(operad.barratt_eccles(3, 2))[0]
    free, (n, g, y) = operad.is_sigma_free(operad.commutativity_operad(3, 2))
    assert not free and n == 2


def test_swap_operad_is_free_but_not_contractible():
    r = operad.is_einfty_proxy(operad.swap_boundary_operad(2), 1)
    assert r["sigma_free"] and not r["passes"]
    assert r["arities"][2]["homology"][0] == (2, [])


def test_free_commutative_algebra_counts_subsets():
    X = idiag.free_diagram(1, S.point(2), 4)
    A, rep = operad.free_algebra(operad.commutativity_operad(3, 2), X, 3)
    assert idiag.validate_idiagram(A) == []
    assert [len(A.values[m].vertices()) for m in range(5)] == [
        sum(comb(m, n) for n in range(4)) for m in range(5)]
    assert 4 in rep["truncated_levels"]


def test_free_algebra_on_empty_diagram_is_the_unit():
    E = idiag.empty_diagram(2, 1)
    A, _ = operad.free_algebra(operad.commutativity_operad(2, 1), E, 2)
    assert [v.counts() for v in A.values] == [[1, 0]] * 3


def test_quotient_of_square_by_swap():
    F1 = idiag.free_diagram(1, S.point(2), 3)
    Q, cert = operad.quotient_by_group(*operad.power_action(F1, 2))
    assert cert["free"] and cert["orbit_count_consistent"]
    assert Q.values[2].counts()[0] == 1
    F0 = idiag.free_diagram(0, S.point(2), 2)
    _, cert0 = operad.quotient_by_group(*operad.power_action(F0, 2))
    assert not cert0["free"]


def test_pushout_product_of_boundary_inclusions():
    g = S.inclusion(S.boundary(1, 2), S.standard(1, 2))
    pp = operad.PushoutProduct(g, g)
    assert pp.cocone_problems == []
    assert pp.domain.counts() == [4, 4, 0]
    assert pp.codomain.counts() == [4, 5, 2]
    assert operad.is_injective(pp.map)


def test_pushout_product_with_empty_inclusion_is_the_map():
    g = S.inclusion(S.boundary(1, 2), S.standard(1, 2))
    e = S.empty_inclusion(S.point(2))
    pp = operad.PushoutProduct(e, g)
    assert pp.domain.counts() == [2, 0, 0]
    assert pp.codomain.counts() == [2, 1, 0]


@pytest.mark.parametrize("n,i,m", [(2, 1, 2), (2, 2, 2), (3, 1, 3), (2, 0, 2)])
def test_filtration_identity_more_cases(n, i, m):
    Y = idiag.free_diagram(1, S.point(2), m)
    g = S.inclusion(S.boundary(1, 2), S.standard(1, 2))
    r = operad.filtration_identity_check(Y, 1, g, n, i, m)
    assert r["holds"], r["witness"]


def test_be_actions_are_right_actions():
    BE = operad.barratt_eccles(3, 1)
    assert operad.validate_action(BE.action(3)) == []
    p, q = (1, 0, 2), (0, 2, 1)
    X = BE.spaces[3]
    for s in X.simplices(1):
        lhs = BE.act(3, q)(BE.act(3, p)(s))
        rhs = BE.act(3, tuple(p[i] for i in q))(s)
        assert lhs == rhs
    assert len(list(permutations(3))) == 6
