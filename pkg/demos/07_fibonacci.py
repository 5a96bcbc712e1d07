"""The whole machine in one dimension, on the Fibonacci substitution.

Collaring a letter means remembering its two neighbors, so the collared
alphabet is the set of legal 3-letter words.  The collared substitution
reads each image inside the substituted 3-word, and border forcing asks
for the power k at which an image word determines its flanking letters.
For sigma(a) = b, sigma(b) = ab the answer is k = 2.
"""

from tilespace import (ap_graph_1d, border_forcing_k, cohomology,
                       collared_substitution, direct_limit, fibonacci,
                       forcing_equations, induced_endomorphisms, legal_words)

fib = fibonacci()
print(f"rules: {fib.rules}")
print(f"legal 3-words: {sorted(legal_words(fib, 3))}\n")

cs = collared_substitution(fib)
print("collared letters and their images:")
for cl in cs.letters:
    print(f"  {cs.names[cl]} = {cl}   ->   {cs.render(cs.rules[cl])}")
print()

k = border_forcing_k(fib)
print(f"minimal border-forcing power: k = {k}")
for eq in forcing_equations(fib):
    print(f"  {eq}")
print()

g = ap_graph_1d(fib)
print(f"collared-letter graph: {g.complex.vertex_count} vertices, "
      f"{g.complex.edge_count} edges")
print("vertex classes (glued letter endpoints):")
for cls in g.vertex_classes:
    print(f"  {cls}")
h0, h1, _ = cohomology(g.complex)
print(f"H0 = {h0.describe()}, H1 = {h1.describe()}")

_, e1, _ = induced_endomorphisms(g.complex, g.maps)
lim = direct_limit(e1.group, e1.matrix)
print(f"H1(hull): rational dimension {lim.rationalDim}  "
      "(the classical rank-2 answer)")
