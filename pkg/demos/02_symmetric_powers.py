# Permutations act on powers X^n.  On positive free diagrams the action is free,
# on F_0 it is not.

from isimplicial import idiag, operad
from isimplicial import sset as S
from isimplicial.idiag import sphere_diagram

N, d = 3, 2

for name, X in [("F0(pt)", idiag.free_diagram(0, S.point(d), N)),
                ("F1(pt)", idiag.free_diagram(1, S.point(d), N)),
                ("F1(S^1)", sphere_diagram(1, 1, N, d))]:
    free, witness = idiag.sigma_free_on_levels(X, 2)
    print(name, "squared: free" if free else f"squared: fixed simplex {witness}")

# orbits: F1^2 / Sigma_2 is a single point at level 2 (the set {1,2})
F1 = idiag.free_diagram(1, S.point(d), N)
Q, cert = operad.quotient_by_group(*operad.power_action(F1, 2))
print("orbit counts", [v.counts()[0] for v in Q.values], "free:", cert["free"])
