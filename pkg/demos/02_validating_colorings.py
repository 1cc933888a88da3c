# %% [markdown]
# Checking a coloring
#
# A coloring is graceful when it is proper and the labels |f(u) - f(v)|
# differ on the edges at every vertex.  The same thing, stated locally:
# colors are distinct on each closed neighbourhood and no path x-y-z has
# f(y) as the mean of f(x) and f(z).

# %%
from graceful_ladders import VertexColoring, Vertex, build_family, induced_edge_labels, is_graceful
from graceful_ladders.coloring import check_closed_neighborhoods, check_midpoint_paths

x = lambda i: Vertex("x", i)
y = lambda i: Vertex("y", i)
L3 = build_family("L", 3)

good = VertexColoring(5, {x(1): 3, x(2): 1, x(3): 2, y(1): 2, y(2): 5, y(3): 4})
for edge, label in induced_edge_labels(L3, good).items():
    print(sorted(map(str, edge)), label)
print(is_graceful(L3, good).graceful)

# %% [markdown]
# Change two colors and labels collide at x3 (2 is halfway between 1 and 3)
# and at y3 (3 is halfway between 2 and 4).

# %%
bad = VertexColoring(5, {x(1): 3, x(2): 1, x(3): 2, y(1): 2, y(2): 4, y(3): 3})
report = is_graceful(L3, bad)
for v in report.violations:
    print(v.kind.value, [str(w) for w in v.witness])
print(len(check_closed_neighborhoods(L3, bad)), len(check_midpoint_paths(L3, bad)))
