"""
Exact bipartization numbers
===========================

d2 counts the fewest vertices and gamma2 the fewest edges whose removal
leaves a bipartite graph. Both are solved exactly on small graphs.
"""

from oddstab import Graph, edge_bipartization, make_complete, make_cycle, make_tstar, maxcut_exact, oct_exact

# outer 5-cycle, inner pentagram, spokes
outer = [(i, (i + 1) % 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
petersen = Graph(10, outer + inner + [(i, i + 5) for i in range(5)])
res = oct_exact(petersen)
print("Petersen d2", res.value, "witness", res.witness)
print("Petersen max cut", maxcut_exact(petersen)[0], "gamma2", edge_bipartization(petersen).value)

for n in (3, 5, 7):
    print(f"K{n}: d2 {oct_exact(make_complete(n)).value}, C{n}: d2 {oct_exact(make_cycle(n)).value}")

# on the extremal graph the clique is the only obstruction
for r in (3, 4, 5):
    g = make_tstar(r, 18)
    print(f"T*({r}, 18): d2 {oct_exact(g).value}, gamma2 {edge_bipartization(g).value}")
