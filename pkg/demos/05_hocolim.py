# The map hocolim -> colim over the injection category, compared in homology.

from isimplicial import idiag, operad
from isimplicial import sset as S
from isimplicial.idiag import sphere_diagram

N, d = 3, 3
F1 = idiag.free_diagram(1, S.point(d), N)
r = idiag.comparison_is_homology_iso(F1)
print("F1(pt): cone homology", r["cone_homology"])

r = idiag.comparison_is_homology_iso(sphere_diagram(1, 1, N, d), "bk")
print("F1(S^1): hocolim", r["hocolim_homology"], "colim", r["colim_homology"])

# not cofibrant: the orbits of F1^2 under the swap
Q, _ = operad.quotient_by_group(*operad.power_action(F1, 2))
r = idiag.comparison_is_homology_iso(Q)
print("F1^2/Sigma_2: hocolim", r["hocolim_homology"], "colim", r["colim_homology"], "iso", r["is_iso"])
