import pytest

from isimplicial import fincat, idiag, phicon


@pytest.mark.parametrize("name", sorted(phicon.corpus()))
def test_corpus_is_permutative(name):
    assert phicon.validate_permcat(phicon.corpus()[name]) == []


def test_broken_symmetry_is_refused():
    A = phicon.z2_signed()
    sym = dict(A.sym)
    C = A.base
    # a nontrivial twist on (0, 1) alone is not involutive
    sym[(C.oid(0), C.oid(1))] = C.mid("t1")
    B = phicon.PermCat(A.base, A.tensor, A.unit, sym, name="broken")
    assert phicon.validate_permcat(B)


def test_phi_levels_are_tuples():
    A = phicon.z2_discrete()
    for n in range(4):
        assert phicon.phi_level(A, n).num_objects == 2 ** n


@pytest.mark.parametrize("name", ["z2-discrete", "z2-one-object"])
def test_tensoring_and_actions_are_equivalences(name):
    r = phicon.levelwise_equivalence_suite(phicon.corpus()[name], 3)
    assert r["all_equivalences"]


def test_level_zero_maps_are_not_all_equivalences():
    r = phicon.levelwise_equivalence_suite(phicon.z2_discrete(), 2)
    assert not all(r["from_level_zero"].values())


def test_signed_phi_monoid_at_small_caps():
    A = phicon.z2_signed()
    assert phicon.functoriality_problems(A, 3) == []
    assert idiag.validate_comm_monoid(phicon.n_phi(A, 2, 2)) == []


def test_nerves_have_unique_inner_fillers():
    for n, r in phicon.quasicategory_report(phicon.z2_one_object(), 2, 3).items():
        assert r["min_fillers"] == r["max_fillers"] == 1


def test_swap_action_conjugates_by_the_symmetry():
    A = phicon.z2_signed()
    P = phicon.phi_level(A, 2)
    swap = phicon.Injection(2, (2, 1))
    F = phicon.phi_action(A, swap, P, P)
    assert fincat.validate_functor(F) == []
    assert fincat.is_equivalence(F)
    # applying the swap twice gives the identity functor
    assert list(fincat.compose_functors(F, F).mor) == list(range(P.num_morphisms))
