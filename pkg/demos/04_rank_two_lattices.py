"""
Rank-2 lattices O[zeta]
=======================

Roots of O[zeta_2n] are the roots of unity it contains.  Over a field where
n sits in a large component, that group is bigger than the reflection orbit
of {1, zeta_2n}.
"""

from rootlat.fieldspec import make_field
from rootlat.qgraph import check_rank2_pairings, rank2_gram, rank2_roots
from rootlat.rootsys import enumerate_roots

K = make_field([210])

for n in (3, 7, 10, 210):
    listed = rank2_roots(K, n)
    orbit = enumerate_roots(rank2_gram(n))
    print(f"n={n:>3}: {len(listed):3d} roots of unity, reflection orbit {len(orbit):3d}")

# coordinates (a, b) with x = a + b zeta_20, for the first few x
for a, b in rank2_roots(K, 10)[:4]:
    print("  a =", a, "  b =", b)

print("all pairings bounded by 2:", check_rank2_pairings(make_field([14, 15]), 14))
