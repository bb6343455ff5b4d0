#!/usr/bin/env python3
"""Build clique blowups and inspect the deterministic labeling.

The blowup CL(G) replaces every edge of G by a complete graph K_n: the
edge's two endpoints plus n-2 freshly labeled vertices become mutually
adjacent. Original vertices keep their labels; the s-th edge (in the
canonical sorted edge order) owns the label block N + s(n-2) .. N + (s+1)(n-2) - 1.
"""

from clique_blowup import (
    BlowupParams,
    blowup_counts,
    blowup_iterate,
    clique_blowup,
    gen_family,
    serialize_edge_list,
)

triangle = gen_family("complete", 3)
print("base graph: triangle,", triangle.vertex_count, "vertices,", triangle.edge_count, "edges")
print(serialize_edge_list(triangle))

# each of the 3 edges gains n-2 = 3 new vertices: 3 + 3*3 = 12 vertices,
# and each edge turns into a K_5 worth of edges: 5*4/2 * 3 = 30
blown = clique_blowup(triangle, n=5)
print("after one blowup with n=5:", blown.vertex_count, "vertices,", blown.edge_count, "edges")

print("\nvertex degrees:")
print("  originals:", blown.degrees[:3], "(each was degree 2, now (n-1)*2 = 8)")
print("  added:    ", blown.degrees[3:6], "... (every added vertex sits in one K_5)")

print("\nlabel block of the first edge (0,1):", [v for v in range(3, 6)])
print("its clique:", [e for e in blown.edges if set(e) <= {0, 1, 3, 4, 5}])

# counts after r iterations follow an exact recurrence; no construction needed
print("\npredicted growth for the triangle, n = 3:")
for r in range(6):
    counts = blowup_counts(3, 3, BlowupParams(3, r))
    print(f"  r={r}: N={counts.vertices:>6}  E={counts.edges:>6}")

# the explicit construction always matches the prediction
deep = blowup_iterate(triangle, BlowupParams(3, 3))
print("\nconstructed r=3 blowup:", deep.vertex_count, "vertices,", deep.edge_count, "edges")
