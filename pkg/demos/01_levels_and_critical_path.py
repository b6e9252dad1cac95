# %% [markdown]
# Levels, conversion and critical path for a small timed project
#
# The bundled ``timed_project`` table has twelve rows (including the α and ω
# markers) and integer durations.  We lay the AoN out in levels, convert it
# to an activity-on-arc network, then run CPM on the result.

# %%
from aoaforge import (
    aon_longest_path,
    build_aon,
    convert,
    group_levels,
    schedule,
    topological_levels,
)
from aoaforge.datasets import load

table = load("timed_project")
aon = build_aon(table)

for i, row in enumerate(group_levels(topological_levels(aon)), start=1):
    print(f"level {i}: {', '.join(row)}")

# %% [markdown]
# Five arcs of the AoN are Z bars.  None of them can share a dummy, so the
# AoA gets five singleton dummies.

# %%
conv = convert(table)
print(conv.stats)
for d in conv.dummies:
    print(f"{d.id}: replaces {d.replaced_bars} ({d.grouping})")

# %%
cpm = schedule(conv.aoa)
print("makespan:", cpm.makespan, "| AoN longest path:", aon_longest_path(aon))
print("critical path:", " -> ".join(cpm.critical))
print("with dummies: ", " -> ".join(cpm.path))
print("floats:", {k: v for k, v in cpm.total_float.items() if v})
