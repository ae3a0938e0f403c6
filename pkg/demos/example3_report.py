"""Walk through the invariants of <30, 42, 51> truncated at 290."""
import numpy as np

import nsg
from nsg.invariants import partition_profile, pseudo_frobenius, semigroup_type

S = nsg.build("30,42,51;290")
S  # repr shows m, c, e

# %% membership is a boolean bitmap, one cell per integer
mem = S.membership
mem[:60].nonzero()[0]
S.small_elements()[:12]
print("conductor", S.conductor, "multiplicity", S.multiplicity, "delta", S.delta)

# %% Apery set of the multiplicity, indexed by residue
ap = nsg.apery(S)
print(ap.w[:10])
print(ap.ordered[-5:])  # sorted view
assert nsg.delta_via_apery(S) == S.delta

# %% how the small elements fall into the blocks [jm, (j+1)m)
p = partition_profile(S)
print("L", p.L, "rho", p.rho, "q", p.q, "nu", p.nu)
counts = np.bincount(np.asarray(S.small_elements()) // S.multiplicity)
print("elements per block", counts)
print("eta", nsg.eta(S))

# %% generators below and above the conductor
print(S.min_generators)
print("e_s, e_c, |d_q| =", nsg.generator_split(S))

# %% Wilf-type numbers
print("E =", nsg.eliahou(S))
print("mu =", nsg.mu(S), "W(mu) =", nsg.wilf(S, nsg.mu(S)))
print("W(e) =", nsg.wilf(S, S.embedding_dimension))
print("concentration", nsg.concentration(S))

# %% type and pseudo-Frobenius numbers
print(pseudo_frobenius(S), semigroup_type(S))

# the whole row in one go
print(nsg.report(S).to_dict())
