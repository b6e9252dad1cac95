# %% [markdown]
# Random instances and running time
#
# Random tables come from the ordered-pair model: arc a_i -> a_j (i < j)
# with probability p.  We time end-to-end conversion (certification
# included) for growing n and fit a log-log slope.

# %%
import math
import statistics
import time

from aoaforge import convert, generate_random_table

rows = []
for n in (50, 100, 200, 400, 800):
    table = generate_random_table(n, 0.05, seed=n)
    start = time.perf_counter()
    conv = convert(table)
    elapsed = time.perf_counter() - start
    rows.append((n, elapsed, conv.stats))
    print(f"n={n:4}  {elapsed:7.3f} s  dummies={conv.stats.dummy_arc_count:6}  "
          f"events={conv.stats.event_count:6}  rounds={conv.stats.iterations}")

# %%
fit = statistics.linear_regression([math.log(n) for n, _, _ in rows],
                                   [math.log(t) for _, t, _ in rows])
print(f"empirical exponent: {fit.slope:.2f}")

# %% [markdown]
# Denser graphs need more dummies per activity.

# %%
for p in (0.05, 0.1, 0.3, 0.6):
    s = convert(generate_random_table(60, p, seed=1)).stats
    print(f"p={p:<5} bars={s.z_bar_count:5} dummies={s.dummy_arc_count:5} events={s.event_count:4}")
