"""Who meets whom: incidence structure of the collared cells.

Each collared edge knows exactly which (tile, slot) pairs produce it, and
each collared vertex knows its incident edges and tiles.  The distribution
of these join counts is rigid enough to serve as a fingerprint of the
whole dataset.
"""

from collections import Counter

from tilespace import compatible_neighbors, incidence_table, load_dataset

d = load_dataset()
table = incidence_table(d)
stats = table.stats(d)

print("tile sides joining each edge (edge count per join size):")
for size, n in sorted(stats["edgeJoinCounts"].items()):
    print(f"  {size} sides: {n} edges")
total = sum(s * n for s, n in stats["edgeJoinCounts"].items())
print(f"  total joins: {total} = 36 tiles x 5 slots\n")

print("tiles by number of distinct vertices:")
for k, n in sorted(stats["tilesByDistinctVertices"].items()):
    print(f"  {k} distinct: {n} tiles")
print()

# loop edges close up on themselves: both endpoints are the same vertex
print(f"loop edges: {stats['loopEdges']}\n")

profiles = Counter((v["degree"], v["sideIncidences"], v["tiles"])
                   for v in stats["vertices"])
print("vertex profiles (degree, edge incidences, tiles):")
for (deg, inc, tiles), n in sorted(profiles.items()):
    print(f"  degree {deg}: joins {inc} edges and {tiles} tiles "
          f"({n} vertices)")
print()

# forcing in miniature: one slot of one tile admits a single neighbor
nbrs = compatible_neighbors(d, 1, 1)
print(f"tiles fitting against slot 1 of tile 1: {nbrs}")
