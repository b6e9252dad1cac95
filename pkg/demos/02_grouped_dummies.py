# %% [markdown]
# Grouping Z bars
#
# The ``grouped_dummies`` table has seven Z bars.  Two bars leave B towards
# heads with identical predecessor sets, and two bars from C and F (which
# have identical successor sets) enter J.  Each pair shares one dummy, so
# seven bars cost only five dummies.

# %%
from aoaforge import convert, find_z_configurations, render_dot, z_bars
from aoaforge.datasets import load

conv = convert(load("grouped_dummies"))
print("bars:", z_bars(conv.aon))
print("Z quadruples:", len(find_z_configurations(conv.aon)))

# %%
for d in conv.dummies:
    print(f"{d.id:4} {d.grouping:11} {list(d.replaced_bars)}")

# %% [markdown]
# Each complete bipartite of the modified AoN becomes one event.

# %%
for i, part in enumerate(conv.parts, start=1):
    print(f"B{i}: {part}")
print(conv.stats)

# %% [markdown]
# DOT drawing; dummies are dashed.  Pipe it to ``dot -Tsvg``.

# %%
print(render_dot(conv.aoa))
