"""
Root systems from Gram matrices
===============================

Enumerate roots by reflections, cut out a fundamental system with a
linear functional, and read the type back off the diagram.
"""

import random

import numpy as np

from rootlat.rootsys import (
    CoxeterType,
    diagram_of,
    enumerate_roots,
    fundamental_system,
    gram_of_type,
    pairing_values,
    recognize_type,
    sorted_roots,
    validate_root_lattice,
)

for name in ("A4", "B3", "D5", "E8", "F4", "H3", "H4", "I2(9)"):
    t = CoxeterType.parse(name)
    print(f"{name:>6}: {len(enumerate_roots(gram_of_type(t))):4d} roots")

# H3 in detail
G = gram_of_type(CoxeterType.parse("H3"))
roots = enumerate_roots(G)
print(G.to_rows())
delta = fundamental_system(roots, G, [5, -2, 7])
print("simple roots:", [str(r) for r in delta])
D = diagram_of(delta, G)
print("diagram edges:", D.edges, "->", recognize_type(D))

# a different functional gives different simple roots, same diagram
rng = random.Random(0)
for _ in range(3):
    t = [rng.randint(-100, 100) for _ in range(3)]
    d = fundamental_system(roots, G, t)
    print(t, [str(r) for r in d], recognize_type(diagram_of(d, G)))

# all pairings between roots, as an exact table
values = pairing_values(G, sorted_roots(roots))
print(len(values), "distinct pairing values")
print(validate_root_lattice(G, roots).checks)

# float view: the Gram matrix under both real embeddings of Q(sqrt5)
from rootlat.cyclo import eval_real, galois

for u in (1, 2):
    g = np.array([[float(eval_real(galois(x, u), 2 ** -40).lo) for x in row] for row in G.entries])
    print("embedding", u, "eigenvalues", np.round(np.linalg.eigvalsh(g), 4))
