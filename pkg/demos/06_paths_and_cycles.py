# %% [markdown]
# Paths and cycles
#
# Cycles need 4 colors except C_5, which needs 5.  Paths need only 4
# from n=4 on: repeating 1 2 4 gives labels 1 2 3 1 2 3 ..., and any two
# consecutive labels differ.

# %%
from graceful_ladders import VertexColoring, cycle, graceful_chromatic_number, is_graceful, path

print([graceful_chromatic_number(cycle(n)).chi_g for n in range(3, 11)])
print([graceful_chromatic_number(path(n)).chi_g for n in range(2, 11)])

g = path(12)
f = VertexColoring(4, {v: (1, 2, 4)[i % 3] for i, v in enumerate(g.vertices)})
print(is_graceful(g, f).graceful)
