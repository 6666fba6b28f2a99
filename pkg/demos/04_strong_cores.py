"""
Growing a strong core from a short odd cycle
============================================

A strong core is a vertex set in which every pair is joined by short paths
of both parities. Growth starts at a short odd cycle and absorbs vertices
until no extension rule applies.
"""

from oddstab import Graph, grow_strong_core, make_cycle, make_tstar, shortest_odd_cycle, verify_core

# a 5-cycle with an apex seeing two non-adjacent cycle vertices
g = Graph(6, list(make_cycle(5).edges()) + [(5, 0), (5, 2)])
trace = []
core = grow_strong_core(g, [0, 1, 2, 3, 4], k=4, trace=trace)
print("core", core.vertices, "extensions", [e.rule for e in trace])

# the 5-cycle alone is a core for k = 3 but not for k = 2
print("C5, k=3:", bool(verify_core(make_cycle(5), range(5), 3)))
print("C5, k=2:", verify_core(make_cycle(5), range(5), 2))

# in T*(r, n) the core is exactly the clique
g = make_tstar(4, 40)
core = grow_strong_core(g, shortest_odd_cycle(g), k=4)
print("T*(4, 40) core", core.vertices)
