"""
Span and girth of small networks
================================

The span of a connected graph is the smallest diameter any of its
spanning trees can have. For graphs of diameter two it takes only the
values 2, 3 and 4, and it can be read off the neighborhoods directly.
"""

from acqnet import girth, span_2club, span_bruteforce
from acqnet import named
from acqnet.trees import classify_tree

graphs = {
    "K6 minus an edge": named.k6_minus_edge(),
    "K(2,3)": named.complete_bipartite_graph(2, 3),
    "Petersen": named.petersen_graph(),
    "H6": named.h6_graph(),
}

# The closed form returns a witness tree along with the value. Its shape
# follows the span: a star, two joined stars, or a star of stars.
for name, g in graphs.items():
    result = span_2club(g)
    shape = classify_tree(result.witness_tree).kind.value
    print(f"{name:18s} span {result.span}  witness {shape:12s} girth {girth(g).girth}")

# The exhaustive search over spanning trees agrees, at a much higher cost.
for name, g in graphs.items():
    assert span_bruteforce(g, cap=10) == span_2club(g).span
print("exhaustive search agrees on all four graphs")

# Outside diameter two only the exhaustive search is exact. A 6-cycle
# can only be spanned by a path.
print("span of C6:", span_bruteforce(named.cycle_graph(6)))

# The shortest cycle comes with a witness.
print("a shortest cycle of H6:", girth(named.h6_graph()).witness_cycle)
