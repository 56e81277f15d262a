"""
Thresholds and the rigidity test
================================

Local thresholds from Newton polyhedra, the global anticanonical
thresholds, and the linear program deciding whether two fibers can be
swapped by a non-square birational map.
"""

from fractions import Fraction

from dp_rigidity.lct import (NewtonPolyhedron, global_lct_bound, kuwata_combine,
                             lct_support, rigidity_certificate)

# y^2 + x^3 (a cusp): the diagonal meets the Newton boundary at s = 6/5
cusp = NewtonPolyhedron.of([(0, 2), (3, 0)])
print("cusp: s* =", cusp.diagonal_coefficient(), " lct =", lct_support(cusp.exponents))

# Disjoint variables add their thresholds, capped at 1
print("x^2 + y^3 + z^7:", lct_support([(2, 0, 0), (0, 3, 0), (0, 0, 7)]),
      "=", kuwata_combine(Fraction(1, 2), Fraction(10, 21)))

print("\nglobal thresholds:", {d: str(global_lct_bound(d)) for d in range(1, 10)})

# Two fibers of degree <= 4 both have threshold >= 2/3, so the sum exceeds 1
for tx, ty in [(Fraction(2, 3), Fraction(2, 3)), (Fraction(1, 2), Fraction(1, 2))]:
    cert = rigidity_certificate(tx, ty)
    if cert.rigid:
        print(f"({tx}, {ty}): no ledger exists, the map is square")
    else:
        w = cert.witness
        print(f"({tx}, {ty}): ledger a={w.a} n={w.n} l={w.l} e={w.e}")
