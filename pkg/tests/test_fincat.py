import pytest

from isimplicial import fincat


def z2():
    return fincat.group_category([0, 1], lambda a, b: (a + b) % 2, 0)


def test_small_constructors_validate():
    for C in (fincat.terminal(), fincat.empty(), fincat.discrete("ab"),
              fincat.codiscrete(range(3)), z2(), fincat.arrow_category(3)):
        assert fincat.validate(C) == []


def test_bad_tables_are_refused():
    # composite of the non-identity element with itself set to itself: not associative-free
    with pytest.raises(fincat.InvalidCategory):
        fincat.FinCat(["*"], [("e", "*", "*"), ("t", "*", "*")], {"*": "e"},
                      [("e", "e", "e"), ("e", "t", "t"), ("t", "e", "t")])


def test_arrow_category_hom_sizes():
    C = fincat.arrow_category(3)
    assert C.num_morphisms == 10
    for a in range(4):
        for b in range(4):
            assert len(C.hom(C.oid(a), C.oid(b))) == (1 if a <= b else 0)


def test_codiscrete_is_equivalent_to_terminal():
    C = fincat.codiscrete(range(4))
    F = fincat.Functor(C, fincat.terminal(), [0] * C.num_objects, [0] * C.num_morphisms)
    assert fincat.validate_functor(F) == []
    assert fincat.is_equivalence(F)


def test_discrete_two_is_not_equivalent_to_terminal():
    C = fincat.discrete("ab")
    F = fincat.Functor(C, fincat.terminal(), [0, 0], [0, 0])
    assert not fincat.is_equivalence(F)


def test_components_and_terminals_of_a_poset():
    C = fincat.arrow_category(2)
    [(comp, terms)] = fincat.component_terminals(C)
    assert len(comp) == 3 and terms == [C.oid(2)]


def test_product_counts():
    P = fincat.product(z2(), fincat.arrow_category(1))
    assert (P.num_objects, P.num_morphisms) == (2, 6)
    assert fincat.validate(P) == []
