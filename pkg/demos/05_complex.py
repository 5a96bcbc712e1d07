"""The cell complex of collared cells and its substitution chain maps.

Faces, edges and vertices assemble into a finite CW-complex; the
substitution acts on it cellularly, giving integer matrices S2, S1, S0
that commute with the boundary operators.  Everything here is exact
integer arithmetic, no floats anywhere.
"""

from tilespace import (build_complex, chain_maps, check_commutation,
                       connectivity, euler_characteristic, export_dot,
                       load_dataset)
from tilespace.matrix import bareiss_det, is_zero, matmul

d = load_dataset()
c = build_complex(d)
m = chain_maps(d)

print(f"cells: {c.face_count} faces, {c.edge_count} edges, "
      f"{c.vertex_count} vertices")
print(f"Euler characteristic: {euler_characteristic(c)}")
print(f"connected components: {connectivity(c)}")
print(f"boundary composition d1.d2 zero: "
      f"{is_zero(matmul(c.boundary1, c.boundary2))}\n")

check_commutation(c, m)   # raises if d.S != S.d anywhere
print("chain maps commute with the boundaries, exactly over Z")

abs_s2 = tuple(tuple(abs(x) for x in row) for row in m.s2)
print(f"S2 row sums (children per face): "
      f"{sorted({sum(r) for r in abs_s2})}")
print(f"S1 row sums (children per edge): "
      f"{sorted({sum(abs(x) for x in r) for r in m.s1})}")
print(f"S0 row sums (image vertices)   : "
      f"{sorted({sum(abs(x) for x in r) for r in m.s0})}")

# the Perron eigenvalue of |S2| is the subdivision count, certified
# rationally: |S2| - 6I is singular
shifted = tuple(tuple(abs_s2[i][j] - (6 if i == j else 0)
                      for j in range(36)) for i in range(36))
print(f"det(|S2| - 6I) = {bareiss_det(shifted)}  "
      "(6 is the Perron eigenvalue)\n")

dot = export_dot(c)
print("DOT export of the 1-skeleton, first lines:")
for line in dot.splitlines()[:6]:
    print(f"  {line}")
print(f"  ... ({len(dot.splitlines())} lines total)")
