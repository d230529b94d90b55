# Free diagrams F_n(K) and their Day convolution.
# Run with: python3 demos/01_free_diagrams.py

from isimplicial import idiag
from isimplicial import sset as S

N, d = 4, 2

# F_1 of a point: at level m one vertex per element of {1..m}
F1 = idiag.free_diagram(1, S.point(d), N)
for m in range(N + 1):
    print("F1(pt) level", m, "counts", F1.values[m].counts())

# the standard inclusion 1 -> 2 picks out the first element
print(F1.action(idiag.Injection(2, (1,))))

# box product of two copies; at level m there are m(m-1) vertices
B = idiag.box(F1, F1)
print("F1 box F1:", [v.counts() for v in B.values])

# comparison with F_2(pt x pt) is an isomorphism levelwise
F2 = idiag.free_diagram(2, S.product(S.point(d), S.point(d)), N)
c = idiag.day_comparison(B, F2)
print("iso at every level:", idiag.is_iso_imap(c))

# an edge in one factor
E = idiag.free_diagram(1, S.standard(1, d), N)
BE = idiag.box(F1, E)
print("F1(pt) box F1(edge) at level 3:", BE.values[3].counts())
