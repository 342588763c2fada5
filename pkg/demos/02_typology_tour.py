"""
A census of the span-girth typology
===================================

Every graph of diameter two falls in one of six span-girth cells, or is a
star. This walks all such graphs up to seven vertices (one per
isomorphism class) and counts how they distribute.
"""

from collections import Counter

from acqnet import classify
from acqnet import corpus
from acqnet.span import is_diameter_two
from acqnet.typology import CELLS

tally = Counter()
for n in range(3, 8):
    for g in corpus.connected_graphs(n):
        if is_diameter_two(g):
            r = classify(g)
            tally[(r.family.value, r.cell)] += 1

for (family, cell), count in sorted(tally.items(), key=lambda kv: (kv[0][1] or (0, 0), kv[0][0])):
    print(f"{family:14s} {str(cell):8s} {count:5d}")

occupied = {cell for _, cell in tally if cell is not None}
print("all six cells occupied:", occupied == set(CELLS))

# A single report, as the command line prints it.
from acqnet import emit_report
from acqnet import named

print(emit_report(classify(named.complete_bipartite_graph(2, 3))))
