"""
The graph Q_K for two real cyclotomic fields
============================================

K = Q(zeta_28^+, zeta_30^+) has generators n = 14, 15; its extension
Q(zeta_420^+) has the single generator n = 210.
"""

from rootlat.fieldspec import make_field
from rootlat.qgraph import classify_rank2, compute_qk, extend_classes, partition_classes

small = make_field([14, 15])
big = make_field([210])

for F in (small, big):
    G = compute_qk(F)
    P, R = partition_classes(G)
    print(F)
    print("  vertices  :", G.vertices)
    print("  components:", G.components)
    print("  P_K       :", P)
    print("  R_K       :", R)
    print("  rank 2    :", [c.alias for c in classify_rank2(F)])

# I2(14) and I2(15) merge once 14 and 15 fall into one component
for a, b in sorted(extend_classes(small, big).items()):
    print(f"  {a.label:>7} -> {b.label}")

# DOT for graphviz; prime powers are double circles
print(compute_qk(small).to_dot())
