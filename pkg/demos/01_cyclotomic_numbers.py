"""
Exact numbers in cyclotomic fields
==================================

Elements live in Q(zeta_N) with rational coordinates in the power basis.
Signs are decided exactly; intervals are only used to separate from zero.
"""

from rootlat.cyclo import (
    conjugate_product,
    cyclotomic_unit_c,
    eval_real,
    galois,
    kronecker_classify,
    make_zeta_plus,
    minimal_polynomial,
    sign,
)
from rootlat.expr import parse_value

# the golden ratio as 2cos(pi/5)
phi = make_zeta_plus(10)
print("phi        =", phi)
print("phi^2-phi  =", phi * phi - phi)
print("1/phi      =", 1 / phi)
print("minpoly    =", [str(c) for c in minimal_polynomial(phi)], "(low to high degree)")

# its Galois conjugate is 2cos(3pi/5) < 0
print("sigma_3    =", galois(phi, 3), "sign", sign(galois(phi, 3)))
box = eval_real(phi, 2 ** -30)
print("enclosure  =", float(box.lo), float(box.hi), "width", float(box.hi - box.lo))

# sqrt(2) = 2cos(pi/4); sigma_3 flips it
r2 = make_zeta_plus(8)
print("sqrt2, sigma_3(sqrt2):", r2, "|", galois(r2, 3))

# Kronecker: bounded conjugates force 2cos(k pi/m) or a root of unity
for text in ("2*cos(pi*3/7)", "sqrt(2)", "z(12)^5", "3", "1 + z(5) + z(5)^4"):
    print(f"{text:>18} ->", kronecker_classify(parse_value(text)))

# cyclotomic units sin(k pi/m)/sin(pi/m)
for m, k in ((5, 2), (7, 3), (4, 2), (12, 5)):
    c = cyclotomic_unit_c(m, k)
    print(f"c_{k} (m={m}) = {c}   norm {conjugate_product(c)}")
