# %% [markdown]
# Lower bounds and the extreme-color rule
#
# A vertex of degree d needs d distinct labels, so it sits in a palette of
# at least d+1 colors.  An r-regular graph needs r+2.  With k colors a
# degree-d vertex can only take a color within k-d of either end.

# %%
from graceful_ladders import build_family, extreme_color_set, known_chi_g, lb_max_degree, lb_regular
from graceful_ladders.graphs import FamilySpec

for code, n in [("L", 5), ("TL", 5), ("DL", 7), ("CL", 6), ("CL", 8)]:
    g = build_family(code, n)
    known = known_chi_g(FamilySpec(code, n))
    print(f"{g.name:6s} degree bound {lb_max_degree(g)}  regular bound {lb_regular(g)}  known {known.chi_g}")

# %%
for k, d in [(5, 4), (7, 4), (8, 5), (8, 6), (9, 5)]:
    print(f"k={k} degree={d}: {sorted(extreme_color_set(k, d))}")
