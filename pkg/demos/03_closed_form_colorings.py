# %% [markdown]
# Closed-form optimal colorings
#
# Each family has a short periodic pattern.  The grid shows the x rail over
# the y rail.

# %%
from graceful_ladders import FamilySpec, build_family, construct, is_graceful

for code, n in [("L", 9), ("SL", 9), ("TL", 9), ("DL", 9), ("CL", 8), ("CL", 9), ("CL", 10)]:
    res = construct(FamilySpec(code, n))
    ok = is_graceful(build_family(res.spec), res.coloring).graceful
    print(f"{res.spec.label}  k={res.claimed_chi_g}  {res.source_case}  graceful={ok}")
    print(res.grid())
    print()

# %% [markdown]
# The patterns hold for large n too.

# %%
bad = [(code, n) for code in ("L", "OL", "SL", "TL", "OTL", "DL", "ODL", "CL")
       for n in range(7, 301)
       if not is_graceful(build_family(code, n), construct(FamilySpec(code, n)).coloring).graceful]
print("failures up to n=300:", bad)
