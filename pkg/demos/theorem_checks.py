"""Run the executable theorem checks on a few semigroups, then fuzz."""
from collections import Counter

import nsg
from nsg.theorems import FuzzParams, check_all, check_T4_3, random_semigroup

for text in ["30,42,51;290", "100,170,171,176;599", "50,55,60,65,70,73,77,81,86,91,96,194,199"]:
    S = nsg.build(text)
    print(text)
    for v in check_all(S):
        flag = "n/a " if not v.hypotheses_met else ("ok  " if v.conclusion_holds else "FAIL")
        print("  ", v.theorem, flag, v.witness)

# %% large multiplicity with small concentration: T4_3 guarantees E >= 0
gens = [1000 + 25 * i for i in range(40)] + [1507, 1899, 13765, 13790, 13815]
S = nsg.build(gens)
v = check_T4_3(S)
print(v.witness["lhs"], v.witness["rhs"], v.witness["E"])

# {0, 3, ->}: W(2) is negative, the c > 2m guard keeps P3_5 quiet
small = nsg.build(";3")
print(nsg.wilf(small, 2), check_all(small)[2])

# %% seeded fuzzing
met = Counter()
bad = []
for S in random_semigroup(FuzzParams(seed=1, count=500)):
    for v in check_all(S):
        met[v.theorem.value] += v.hypotheses_met
        if v.falsified:
            bad.append((str(S.spec), v.theorem.value))
print(dict(met))
print("falsified:", bad)
