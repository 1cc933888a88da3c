# %% [markdown]
# Exact search and infeasibility certificates
#
# The solver walks k up from the lower bound.  Every k it exhausts leaves a
# certificate that can be replayed.

# %%
import json

from graceful_ladders import SearchConfig, build_family, graceful_chromatic_number
from graceful_ladders.solver import replay_certificate

g = build_family("DL", 7)
rep = graceful_chromatic_number(g)
print(f"{g.name}: chi_g = {rep.chi_g}, lower bound {rep.lower_bound}")
for r in rep.infeasible_ks:
    print(f"  k={r.k}: exhausted in {r.nodes_expanded} nodes")
print(json.dumps(rep.certificates[-1].to_json(), indent=2)[:400], "...")
print("replays:", all(replay_certificate(g, c) for c in rep.certificates))

# %% [markdown]
# Turning every pruning rule off changes the effort, not the answer.

# %%
for cfg in (SearchConfig(), SearchConfig().without_pruning()):
    r = graceful_chromatic_number(build_family("CL", 7), cfg)
    print(r.chi_g, r.nodes_expanded_total)

# %% [markdown]
# A node budget turns an unfinished k into an explicit upper-bound-only result.

# %%
r = graceful_chromatic_number(build_family("TL", 5), SearchConfig(node_budget=50))
print(r.chi_g, r.inconclusive, [(x.k, x.completed) for x in r.infeasible_ks])
