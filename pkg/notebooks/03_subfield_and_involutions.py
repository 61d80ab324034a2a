"""
Subfield subgroups and involution sequences of PSL(2,49)
========================================================

PSL(2,49) contains 350 copies each of PSL(2,7) and PGL(2,7).  This script
counts how many copies contain a given dihedral subgroup, and then searches
for length-4 irredundant generating sequences of involutions.  The second
part runs for about half a minute.
"""

# %%
import numpy as np

from psl2rp.psl2 import make_group
from psl2rp.witness import InvolutionIncidence, verify_prop35_37

rep = verify_prop35_37(7, samples=12)
print(rep.data["psl_copies"], "PSL(2,7) copies,", rep.data["pgl_copies"], "PGL(2,7) copies")
for order, rows in rep.data["dihedral_samples"].items():
    print(f"D{order}: PSL copies {sorted({r['psl_copies'] for r in rows})},"
          f" PGL copies {sorted({r['pgl_copies'] for r in rows})}")

# %%
# Pairwise intersections of copies that contain a qualifying dihedral group.
for case, tags in rep.data["intersection_tags"].items():
    print(case, tags)

# %%
# A set of involutions generates a proper subgroup exactly when one of the
# listed maximal subgroups contains all of them.
inc = InvolutionIncidence(make_group(7, 2))
print(inc.B.shape, "subgroups x involutions")
kinds, counts = np.unique(inc.kinds, return_counts=True)
print({str(k): int(c) for k, c in zip(kinds, counts)})

# %%
# Exhaustive search up to conjugacy: PSL(2,49) has no irredundant generating
# 4-tuple of involutions, while PSL(2,9) = A6 has many.
print("PSL(2,49):", len(inc.length4_sequences()))
print("PSL(2,9): ", len(InvolutionIncidence(make_group(3, 2)).length4_sequences()))
