# Tuple categories of a permutative category form a commutative monoid of nerves.

from isimplicial import idiag, phicon

for name, A in sorted(phicon.corpus().items()):
    print("==", name)
    print("permutative:", phicon.validate_permcat(A) or "ok")
    r = phicon.levelwise_equivalence_suite(A, 3)
    print("tensoring and positive actions are equivalences:", r["all_equivalences"])
    print("maps out of level 0 all equivalences:", all(r["from_level_zero"].values()))

A = phicon.z2_discrete()
M = phicon.n_phi(A, 3, 2)
print("monoid laws:", idiag.validate_comm_monoid(M) or "ok")
print("with a sabotaged multiplication:", len(idiag.validate_comm_monoid(idiag.sabotage_level_swap(M))),
      "failures")
