"""
Diameters of random graphs
==========================

Dense binomial random graphs almost always have diameter at most two.
Below that density the share collapses quickly. The same machinery
checks that a minimum degree of at least (n-1)/2 forces diameter two, and
tallies the diameter of each graph against that of its complement.
"""

from acqnet import complement_diameter_census, diameter2_fraction, sabidussi_scan
from acqnet.experiments import write_csv

# Share of graphs with diameter <= 2 along a grid of edge probabilities.
# Each trial has its own seed stream, so the grid points share graphs:
# raising p only ever adds edges.
sweep = [diameter2_fraction(30, p, 200, seed=1) for p in (0.1, 0.2, 0.3, 0.4, 0.5)]
print(write_csv(sweep))

print("n=100, p=0.5:", diameter2_fraction(100, 0.5, 100, seed=1).rate)

scan = sabidussi_scan(10, 500, seed=2)
print("min-degree scan:", scan.counts, "from", scan.details["draws"], "draws")

census = complement_diameter_census(6)
print("census cells:", census.counts)
print("forbidden cells hit:", census.details["forbidden"])
