#!/usr/bin/env python3
"""Exact projective geometry: lattices, multiplicities, deconing.

Every line is an integer triple (a, b, c) for a*x + b*y + c*z = 0,
stored gcd-reduced with the first nonzero coefficient positive. That
makes intersection grouping exact: no epsilons anywhere.
"""

from arrcohom import decone, intersect, lattice, mu, parse_line
from arrcohom.catalog import braid_a3, generic, pencil

# canonicalization in action
print("canonical forms:")
for raw in [(0, 0, 2), (-1, 1, 0), (2, -4, 6)]:
    print(f"  {raw} -> {parse_line(raw).coeffs}")

# two lines meet in exactly one point, computed as a cross product
l1, l2 = parse_line((1, -1, 0)), parse_line((1, 0, -1))
print(f"\n{l1} meets {l2} at {intersect(l1, l2)}")

# the six-line braid arrangement x y z (x-y)(x-z)(y-z)
arr = braid_a3()
lat = lattice(arr)
print(f"\nbraid arrangement: {len(arr.lines)} lines, {len(lat)} intersection points")
for pt, inc in lat.points:
    print(f"  {pt}  lines {list(inc)}  (multiplicity {len(inc)})")
print(f"multiplicity histogram: {lat.histogram()}")

# mu(i, k): points on line i whose multiplicity k divides.
# On the braid arrangement every line sees two triple points and one double.
print("\ndivisible-point counts on the braid arrangement:")
for k in (2, 3, 6):
    print(f"  k={k}: {[mu(arr, i, k, lat) for i in range(6)]}")

# a pencil has a single intersection point, so it is not essential
print(f"\npencil of 5 lines: {lattice(pencil(5)).histogram()} (one point only)")
print(f"generic 4 lines:   {lattice(generic(4)).histogram()} (all double points)")

# deconing: send line 2 (the line z) to infinity. Affine lines are
# grouped into parallel classes, one class per point on the removed line.
aff = decone(arr, 2)
print(f"\ndeconed braid (infinity = line 2): {aff.n} affine lines")
print(f"  parallel classes (source indices): {aff.classes}")
for (pt, m), members in zip(aff.class_points, aff.classes):
    print(f"  class {list(members)} meets infinity at {pt}, m = {m}")
print(f"  finite points: {[(str(pt), list(inc)) for pt, inc in aff.finite_points]}")
