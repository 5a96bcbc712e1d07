"""Cohomology of the complex and of the hull.

Integral cohomology of the cell complex comes out of Smith normal form of
the boundary matrices.  The substitution induces endomorphisms on each
cohomology group, and the Cech cohomology of the tiling hull is the direct
limit under iterating them: free parts stabilize to a subspace of fixed
rational dimension, with denominators growing along the eigenvalues, while
torsion either survives or is eventually killed.
"""

import json

from tilespace import (build_complex, chain_maps, cohomology, direct_limit,
                       hull_cohomology, induced_endomorphisms, load_dataset)

d = load_dataset()
c = build_complex(d)

h0, h1, h2 = cohomology(c)
print("cohomology of the complex:")
print(f"  H0 = {h0.describe()}")
print(f"  H1 = {h1.describe()}")
print(f"  H2 = {h2.describe()}\n")

e0, e1, e2 = induced_endomorphisms(c, chain_maps(d))
print(f"induced map on H2 acts on {len(e2.moduli)} generators "
      f"({e2.torsion_count} torsion, {len(e2.moduli) - e2.torsion_count} "
      "free)")

for name, e in (("H0", e0), ("H1", e1), ("H2", e2)):
    lim = direct_limit(e.group, e.matrix)
    rep = lim.integralReport
    line = (f"  {name}(hull): rational dimension {lim.rationalDim}, "
            f"stabilizes at power {lim.stabilizationIndex}")
    if rep.get("denominatorPrimes"):
        line += f", denominators over primes {rep['denominatorPrimes']}"
    print(line)
print()

report = hull_cohomology(d)
print("consistency checks attached to the full report:")
for check in report["checks"]:
    print(f"  [{'x' if check['passed'] else ' '}] {check['name']}")

print("\nH2 limit block of the report:")
print(json.dumps(report["limits"]["H2"], indent=2, sort_keys=True))
