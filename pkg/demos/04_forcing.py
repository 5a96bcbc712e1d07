"""Border forcing: why collaring is worth the bookkeeping.

A substitution forces its border when substituting a tile once determines
the substituted neighbors along every edge.  For the collared tiles this
holds already at k=1: all 180 (tile, slot) sides see exactly one possible
neighbor label after substitution.  Project down to the 11 bare pentagon
types and the property collapses.
"""

from tilespace import (load_dataset, patch_consistency,
                       verify_border_forcing_k1,
                       verify_border_forcing_uncollared)

d = load_dataset()

# the rules themselves are internally consistent patch by patch
bad = [r.parent for r in d.rules if not patch_consistency(r, d).passed]
print(f"patch consistency failures: {bad if bad else 'none'}\n")

report = verify_border_forcing_k1(d)
print(f"collared, k={report.depth}: "
      f"{report.singleton_count()}/{len(report.perEdgeSide)} sides "
      f"forced -> {'PASS' if report.passed else 'FAIL'}")

# the same check one substitution deeper, just to see it stay forced
deep = verify_border_forcing_k1(d, depth=2)
print(f"collared, k={deep.depth}: "
      f"{deep.singleton_count()}/{len(deep.perEdgeSide)} sides "
      f"forced -> {'PASS' if deep.passed else 'FAIL'}\n")

un = verify_border_forcing_uncollared(d)
print(f"uncollared projection: {un['classes']} prototile classes, "
      f"{un['groups']} (class, slot) groups")
print(f"forced groups: {un['singletons']}/{un['groups']} "
      f"-> {'PASS' if un['passed'] else 'FAIL'}")
cex = un["counterexample"]
print(f"\na concrete failure: prototile class {cex['class']}, "
      f"slot {cex['slot']}")
print(f"  possible substituted neighbors: {sorted(cex['labels'])}")
print("\nwithout the collar the substitution cannot decide between these,")
print("which is exactly the ambiguity the 36 collared tiles eliminate.")
