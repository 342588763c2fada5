"""
Structural witnesses
====================

Detectors for spanning stars, central neighbor pairs, cliqueless points,
complete multipartite structure and Moore graphs, plus the six-item
checklist that every cliqueless hamlet passes.
"""

from acqnet import classify, cliqueless_hamlet_properties, structure_witnesses
from acqnet import named

# Six vertices is the smallest a cliqueless hamlet can be.
h6 = named.h6_graph()
check = cliqueless_hamlet_properties(h6)
for item, result in check.items().items():
    print(f"item ({item}): {'pass' if result.passed else 'fail'}")

# A cliquish hamlet in which vertex 3 sits on no triangle and has no
# neighbor on one either.
g = named.locally_cliqueless_hamlet()
r = classify(g)
print(r.family.value, r.cell, "cliqueless neighborhoods at", sorted(r.witnesses.cliqueless_neighborhood_points))

# Complete multipartite graphs are recognized from the complement: each of
# its components has to be a clique.
octahedron = named.complete_multipartite_graph(2, 2, 2)
print("octahedron parts:", [sorted(p) for p in structure_witnesses(octahedron).multipartite_parts])
print("octahedron:", classify(octahedron).family.value)

# A part with a single vertex gives a vertex adjacent to everyone, which
# drops the span to 2: such a graph is a coterie, not a social circle.
print("K(1,2,3):", classify(named.complete_multipartite_graph(1, 2, 3)).family.value)

# The pentagon and the Petersen graph are the small Moore graphs.
for name, m in [("C5", named.cycle_graph(5)), ("Petersen", named.petersen_graph())]:
    print(name, "moore:", structure_witnesses(m).moore)
