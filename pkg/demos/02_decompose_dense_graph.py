"""
Decomposing a dense graph into a bipartite base plus suspensions
================================================================

A planted instance hides small odd pieces on top of a large complete
bipartite graph and shuffles the labels. decompose recovers the base and
every suspension, and verify_decomposition re-checks the result clause by clause.
"""

from oddstab import decompose, derived_bounds, make_planted, verify_decomposition

g, truth = make_planted(300, 300, [3, 2], "distinct", seed=5)
print(f"n = {g.n}, m = {g.m}, planted outside count {truth.outside_count}")

d = decompose(g, k=5, r=5)
print("recovered outside count", d.outside_count, "equality case", d.equality)
print("suspensions", [(len(s.vertices), s.anchor) for s in d.suspensions])
print("verdict", verify_decomposition(g, d, 5))
print("(d2, gamma2) upper bounds", derived_bounds(g, d))

# a nested chain of suspensions, each hanging off the previous one
g, truth = make_planted(60, 60, [3, 3, 2], "chain", seed=1)
d = decompose(g, k=5, r=6)
print("chain: outside", d.outside_count, "anchors", [s.anchor for s in d.suspensions])

# five outside vertices do not fit a budget of r - 1 = 4; the failure says where
print(decompose(g, k=5, r=5))
