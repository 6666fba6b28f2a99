"""
Building the extremal graph T*(r, n)
====================================

A balanced complete bipartite graph on n - r + 1 vertices, with an r-clique
glued on at one vertex of the larger side.
"""

from math import comb

from oddstab import biconnected_components, has_cycle_of_length, make_tstar, threshold_edges, to_graph6

# the edge count matches the threshold exactly
for r, n in [(3, 20), (4, 50), (5, 100)]:
    g = make_tstar(r, n)
    print(f"T*({r}, {n}): {g.m} edges, threshold {threshold_edges(n, r)}")

# two blocks: the complete bipartite part and the clique, sharing vertex 0
g = make_tstar(3, 20)
bct = biconnected_components(g)
print("block sizes", sorted(len(b) for b in bct.blocks), "cut vertices", sorted(bct.cut_vertices))

# every odd cycle stays inside the clique, so long odd cycles never appear
print("contains a 9-cycle:", has_cycle_of_length(make_tstar(3, 100), 9) is not None)
print("clique edges", comb(3, 2), "graph6", to_graph6(g))
