"""
Irredundant generating sequences of small groups
================================================

m(G) is the longest irredundant generating sequence.  The search works on
cyclic subgroups of a Cayley table and prunes by automorphisms.
"""

# %%
import time

from psl2rp.genseq import aut_orbit_counts, group_satisfies_rp, max_irredundant_length
from psl2rp.psl2 import make_group

for p in (5, 7, 11, 13):
    t0 = time.perf_counter()
    res = max_irredundant_length(make_group(p))
    print(f"m(PSL(2,{p})) = {res.m}  ({res.nodes} nodes, {time.perf_counter() - t0:.2f}s)")

# %%
# The replacement property for the whole group: every sequence of length m
# is checked, one representative per family of cyclic subgroups.
print("A5 has RP:", group_satisfies_rp(make_group(5)))

# %%
# Length-4 sequences of PSL(2,p) up to automorphism (PGL(2,p)).
for p in (7, 11, 13, 17, 19):
    c = aut_orbit_counts(p)
    print(f"p={p:2d}: {c.element_sets:3d} element sets, {c.cyclic_families:3d} cyclic families,"
          f" {c.sequences:4d} ordered sequences")
