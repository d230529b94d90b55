from math import perm

from hypothesis import given, strategies as st

from isimplicial import fincat, injcat
from isimplicial.injcat import Injection, identity


def inj(n_max=5):
    return st.integers(0, n_max).flatmap(lambda n: st.integers(0, n).flatmap(
        lambda m: st.permutations(range(1, n + 1)).map(lambda p: Injection(n, tuple(p[:m])))))


def test_injection_counts():
    for m in range(4):
        for n in range(5):
            assert len(injcat.injections(m, n)) == (perm(n, m) if m <= n else 0)


@given(inj(), inj(), inj())
def test_composition_is_associative_when_defined(a, b, c):
    if b.n == a.m and c.n == b.m:
        assert (a @ b) @ c == a @ (b @ c)


@given(inj())
def test_identities(a):
    assert a @ identity(a.m) == a == identity(a.n) @ a


def test_concat_is_strictly_associative_and_unital():
    a, b, c = Injection(2, (2,)), Injection(3, (3, 1)), Injection(1, (1,))
    assert injcat.concat(injcat.concat(a, b), c) == injcat.concat(a, injcat.concat(b, c))
    assert injcat.concat(identity(0), a) == a == injcat.concat(a, identity(0))


def test_block_permutation_moves_blocks():
    b = injcat.block_permutation([1, 2], (1, 0))
    assert b.values == (3, 1, 2)
    assert injcat.shuffle(1, 2) == b


def test_generators_reach_every_injection():
    for k in range(3):
        reach = {identity(k)}
        frontier = list(reach)
        while frontier:
            a = frontier.pop()
            if a.n > 4:
                continue
            for g in injcat.generators(a.n, 4):
                b = g @ a
                if b not in reach:
                    reach.add(b)
                    frontier.append(b)
        assert reach == {a for n in range(k, 5) for a in injcat.injections(k, n)}


def test_icat_is_a_category():
    C = injcat.ICat(3).cat
    assert fincat.validate(C) == []
    assert C.num_morphisms == sum(perm(n, m) for m in range(4) for n in range(m, 4))


def test_comma_components_have_terminal_objects():
    for k in range(3):
        for m in range(k, 4):
            C = injcat.comma_concat([k], m)
            assert all(len(t) >= 1 for _, t in fincat.component_terminals(C))


def test_sigma_2_acts_freely_on_components():
    table, free = injcat.sigma_action_on_components(1, 2, 3)
    assert free and table[(1, 0)] != table[(0, 1)]


def test_cofinality_proxy_small():
    rows = injcat.is_homotopy_cofinal_proxy(3)
    assert all(r["connected"] for r in rows)
    assert all(r["acyclic"] for r in rows)
