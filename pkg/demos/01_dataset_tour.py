"""A first look at the collared-pentagon dataset.

Every cell of the tiling carries its decoration plus the decorations of its
immediate surroundings, so the finite cell inventory is larger than the 11
bare pentagon types: 36 collared tiles, 45 collared edges, 10 collared
vertices, and one subdivision rule per tile.
"""

from tilespace import load_dataset, validate_dataset

d = load_dataset()

print(f"tiles    : {len(d.tiles)}")
print(f"edges    : {len(d.edges)}")
print(f"vertices : {len(d.vertices)}")
print(f"rules    : {len(d.rules)}")
print()

t = d.tile(1)
print("tile 1, exterior groups (A, B, C) per slot:")
for slot, group in enumerate(t.exterior, start=1):
    print(f"  slot {slot}: {group}")
print()

e = d.edge(1)
print(f"edge 1 sides: {e.sides}")
v = d.vertex(1)
print(f"vertex 1 decorations: {v.decos}  (degree {v.degree})")
print()

r = d.rule(1)
print(f"rule 1 children (central first): {r.children}")
print()

report = validate_dataset(d)
print(f"validation: {'ok' if report.passed else 'FAILED'}")
for check in report.checks:
    mark = "x" if check.passed else " "
    line = f"  [{mark}] {check.name}"
    print(line + (f": {check.detail}" if check.detail else ""))
