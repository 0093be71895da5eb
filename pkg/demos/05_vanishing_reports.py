#!/usr/bin/env python3
"""Eigenspace vanishing reports.

The degree n+1 polynomial of an arrangement has a Milnor fiber whose
monodromy splits first cohomology into eigenspaces, one per (n+1)-st
root of unity. The report walks the divisors k >= 2 of n+1 and settles
each: a zero divisible-point count on some line kills the eigenspace
for k > 2; for prime powers, an essential arrangement with a count <= 1
on some line kills it too; failing both, the modular bound over F_p
caps its dimension.
"""

import json

from arrcohom import report
from arrcohom.catalog import braid_a3, generic, near_pencil, pencil


def show(name, arr):
    rep = report(arr)
    print(f"\n=== {name}: {rep.degree} lines, essential={rep.essential} ===")
    print(f"trivial eigenspace dimension: {rep.trivial_eigenspace_dim}")
    for rec in rep.primes:
        print(f"  p={rec.p}: min count {rec.min_mu} at line {rec.witness_line}, "
              f"modular bound {rec.beta1} (same for all {len(rec.beta1_all_deconings)} deconings)")
    for rec in rep.orders:
        bound = "unknown" if rec.bound is None else rec.bound
        print(f"  order {rec.k}: {rec.verdict}  (eigenspace dimension <= {bound})")


# the braid arrangement is the boundary case: its order 3 eigenspace is
# actually nonzero, and the bound of 1 is sharp
show("braid", braid_a3())

# near-pencils vanish at every nontrivial order
show("near-pencil of 6", near_pencil(6))

# generic arrangements: order 4 dies by a zero count, order 2 is bounded by 0
show("generic 4 lines", generic(4))

# pencils are not essential, so only the bare modular bound applies
show("pencil of 5", pencil(5))

# canonical JSON rendering, stable under sorted-key round-trips
payload = report(braid_a3()).to_json_dict()
text = json.dumps(payload, sort_keys=True)
assert json.dumps(json.loads(text), sort_keys=True) == text
print(f"\ncanonical JSON for the braid report ({len(text)} bytes):")
print(text[:160] + " ...")
