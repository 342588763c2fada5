"""
Mining 2-clubs in a larger network
==================================

A 2-club is a set of people who are all friends or friends of friends
inside the set itself. Maximal 2-clubs overlap, and a subset of a 2-club
need not be one, so they are found by an exact branch-and-bound search.
Each club can then be classified like any acquaintance network.
"""

from acqnet import Graph, classify_clubs, maximal_two_clubs
from acqnet import named

# Two communities joined by a single bridge: a six-vertex hamlet and a
# five-vertex coterie around a hub.
hamlet = named.h6_graph()
edges = list(hamlet.edges())
edges += [("hub", f"m{i}") for i in range(4)] + [("m0", "m1"), ("m2", "m3")]
edges += [(6, "hub")]
host = Graph(list(hamlet.labels) + ["hub", "m0", "m1", "m2", "m3"], edges)

clubs = maximal_two_clubs(host, min_size=4)
for club, report in zip(clubs, classify_clubs(host, clubs)):
    members = sorted(map(str, club.members))
    print(f"{len(members):2d} members {members}: {report.family.value} {report.cell}")
