# Barratt-Eccles versus the commutativity operad, and free algebras.

from math import comb

from isimplicial import idiag, operad
from isimplicial import sset as S

BE = operad.barratt_eccles(3, 3)
print("E Sigma_3 counts:", BE.spaces[3].counts())
print("axioms:", operad.validate_operad(BE, max_dim=1) or "ok")
r = operad.is_einfty_proxy(BE, 2)
print("sigma-free", r["sigma_free"], "homology", [a["homology"] for a in r["arities"]])

Com = operad.commutativity_operad(3, 2)
print("Com sigma-free?", operad.is_sigma_free(Com))

# the free commutative algebra on F1(pt): finite subsets of size <= 3
X = idiag.free_diagram(1, S.point(2), 4)
A, rep = operad.free_algebra(Com, X, 3)
for m in range(5):
    print(m, len(A.values[m].vertices()), sum(comb(m, n) for n in range(4)))
print("exact up to level", max(rep["exact_levels"]))

# pushout-product of the boundary inclusion of an edge with itself: the square
g = S.inclusion(S.boundary(1, 2), S.standard(1, 2))
pp = operad.PushoutProduct(g, g)
print("domain", pp.domain.counts(), "codomain", pp.codomain.counts())
