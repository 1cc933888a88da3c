# %% [markdown]
# Ladder families and graph products
#
# Every family is two rails x1..xn and y1..yn plus some cross edges.
# Vertices come out interleaved (x1, y1, x2, y2, ...).

# %%
from graceful_ladders import Family, build_family, cartesian_product, cycle, max_degree, path, strong_product
from graceful_ladders.serialize import graph_to_dot

for fam in Family:
    n = max(fam.min_n, 5)
    g = build_family(fam, n)
    print(f"{g.name:10s} order={g.order:3d} size={g.size:3d} max degree={max_degree(g)}")

# %% [markdown]
# Closed and circular ladders are cartesian products with P_2, the diagonal
# ladder is the strong product.  Equality is on vertex and edge sets.

# %%
print(cartesian_product(path(6), path(2)) == build_family("L", 6))
print(cartesian_product(cycle(6), path(2)) == build_family("CL", 6))
print(strong_product(path(6), path(2)) == build_family("DL", 6))

# %% [markdown]
# DOT output groups each rail on one rank, so Graphviz draws a ladder.

# %%
print(graph_to_dot(build_family("TL", 3)))
