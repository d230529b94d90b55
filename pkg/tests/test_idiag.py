from math import perm

import pytest

from isimplicial import idiag, phicon
from isimplicial import sset as S
from isimplicial.injcat import Injection


N, D = 3, 2


@pytest.fixture(scope="module")
def F1():
    return idiag.free_diagram(1, S.point(D), N)


def test_free_diagram_counts_and_validity():
    K = S.standard(1, D)
    X = idiag.free_diagram(2, K, N)
    assert idiag.validate_idiagram(X) == []
    for m in range(N + 1):
        assert X.values[m].counts() == [perm(m, 2) * c for c in K.counts()]


def test_broken_action_is_caught(F1):
    swap = Injection(2, (2, 1))

    def act(a):
        f = F1.action(a)
        if a == swap:
            return S.identity_map(F1.values[2])
        return f
    bad = idiag.IDiagram(N, D, F1.values, act, name="broken")
    assert idiag.validate_idiagram(bad)


def test_free_map_is_natural():
    g = S.inclusion(S.boundary(1, D), S.standard(1, D))
    U, V = (idiag.free_diagram(1, X, N) for X in (g.source, g.target))
    f = idiag.free_map(1, g, U, V)
    assert idiag.validate_imap(f, exhaustive=True) == []


def test_box_symmetry_is_an_involution(F1):
    F2 = idiag.free_diagram(2, S.point(D), N)
    XY, YX = idiag.box(F1, F2), idiag.box(F2, F1)
    s, t = idiag.box_symmetry(XY, YX), idiag.box_symmetry(YX, XY)
    both = idiag.compose_imaps(t, s)
    assert all(both.maps[m] == S.identity_map(XY.values[m]) for m in range(N + 1))


def test_left_unitor_is_an_iso(F1):
    UX = idiag.box(idiag.unit_diagram(N, D), F1)
    assert idiag.is_iso_imap(idiag.left_unitor(UX))


def test_associator_is_an_iso(F1):
    XY = idiag.box(F1, F1)
    XYZ = idiag.box_many([F1, F1, F1])
    XY_Z = idiag.box(XY, F1)
    assert idiag.is_iso_imap(idiag.associator(XYZ, XY_Z, XY))


def test_box_of_free_points_counts(F1):
    B = idiag.box(F1, F1)
    assert [v.counts()[0] for v in B.values] == [0, 0, 2, 6]


def test_sigma_freeness_and_control(F1):
    assert idiag.sigma_free_on_levels(F1, 2)[0]
    free, w = idiag.sigma_free_on_levels(idiag.free_diagram(0, S.point(D), N), 2)
    assert not free and w["level"] == 0


def test_colim_of_free_diagram_is_a_point(F1):
    X, col, rep = idiag.colim_I(F1)
    assert X.counts()[0] == 1


def test_hocolim_regimes_agree_on_free_points(F1):
    a = idiag.comparison_is_homology_iso(F1, "grothendieck")
    b = idiag.comparison_is_homology_iso(F1, "bk")
    assert a["is_iso"] and b["is_iso"]
    assert a["hocolim_homology"] == b["hocolim_homology"]


def test_trivial_monoid_is_valid_and_sabotage_is_caught():
    M = idiag.trivial_monoid(N, D)
    assert idiag.validate_comm_monoid(M) == []
    A = phicon.n_phi(phicon.z2_discrete(), N, D)
    assert idiag.validate_comm_monoid(A) == []
    failures = idiag.validate_comm_monoid(idiag.sabotage_level_swap(A, 2))
    assert failures and any("commut" in f or "natural" in f or "mult" in f for f in failures)


def test_pushout_diagram_validates():
    Z = idiag.sphere_diagram(1, 1, N, D)
    assert idiag.validate_idiagram(Z) == []
    assert [v.counts() for v in Z.values] == [[0, 0, 0], [1, 1, 0], [2, 2, 0], [3, 3, 0]]
