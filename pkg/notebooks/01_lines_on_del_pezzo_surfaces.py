"""
Lines on del Pezzo surfaces
===========================

Count lines, conics and cubics on every del Pezzo surface by solving the
two numerical conditions C.H = h and C^2 = r h - 2 in the Picard lattice.
"""

from dp_rigidity.curves import coefficient_bound, conics, cubics, lines
from dp_rigidity.picard import QUADRIC, DelPezzoLattice, intersect

# The cubic surface: the blow-up of the plane in six points.
cubic = DelPezzoLattice(3)
print("K =", cubic.canonical_class, " K^2 =", intersect(cubic.canonical_class,
                                                          cubic.canonical_class))

# Its 27 lines, as classes in the basis E0..E6
found = lines(cubic)
print(len(found), "lines, e.g.", ", ".join(str(c) for c in found[:4]))

# The search box comes from Cauchy-Schwarz; every step is a checked inequality
bound = coefficient_bound(cubic, 1)
for step in bound.chain:
    print("  ", step.claim, "->", step.holds())

# Degree by degree
print("\ndegree  lines  conics  cubics")
for d in range(1, 10):
    lat = DelPezzoLattice(d)
    print(f"{d:>6}  {len(lines(lat)):>5}  {len(conics(lat)):>6}  {len(cubics(lat)):>6}")
quadric = DelPezzoLattice(8, QUADRIC)
print("  8(q)  {:>5}  {:>6}  {:>6}".format(len(lines(quadric)), len(conics(quadric)),
                                          len(cubics(quadric))))
