"""Negative Eliahou numbers: the published table and the two grid sweeps."""
from collections import Counter

from nsg.sweep import builtin_type1, builtin_type2, classify_family, run_sweep
from nsg.table1 import compare

for row in compare():
    tag = "ok" if row.matches else "differs " + str(row.mismatches)
    print(row.index, row.spec, tag)

# %% the first family: <100, 170, a, b> with thresholds 593..602
spec = builtin_type1()
print(spec.grid_size, "grid points")
t1 = run_sweep(spec)
print(t1.raw_hits, "hits,", len(t1.rows), "distinct semigroups")
for row in t1.rows[:5]:
    r = row.report
    print(row.point, r.eliahou, r.concentration, r.mu, r.wilf_mu)

# %% second family
t2 = run_sweep(builtin_type2())
print(t2.raw_hits, len(t2.rows))
Counter(row.report.eliahou for row in t1.rows + t2.rows)

# each hit has e_s in {3, 4} and a conductor far above m
Counter(classify_family(row) for row in t1.rows + t2.rows)
