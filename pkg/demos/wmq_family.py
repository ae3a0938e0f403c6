"""The extremal family W_{m,q} = <m, qm+1, ..., qm+m-1>."""
import numpy as np

import nsg
from nsg.invariants import partition_profile
from nsg.theorems import check_P3_3

S = nsg.w_mq(7, 3)
S.small_elements(), S.conductor, S.delta

# %% delta, concentration, and the sharp P3_3 bound over a grid
rows = []
for m in range(2, 13):
    for q in range(1, 6):
        S = nsg.w_mq(m, q)
        p = partition_profile(S)
        v = check_P3_3(S)
        rows.append((m, q, S.delta, p.L + 1, nsg.concentration(S), v.witness["tight"]))
table = np.array(rows)
print(table[:10])

# delta = L + 1 throughout
assert (table[:, 2] == table[:, 3]).all()

# %% concentration equals m except at q = 1, where no small element but 0 exists
print(table[table[:, 1] == 1][:, [0, 4]])
print(table[table[:, 1] > 1][:, [0, 4]].T)

# %% W(k) is never positive for k up to m
S = nsg.w_mq(9, 4)
[nsg.wilf(S, k) for k in range(1, 10)]
