"""
Replacement-property failures in PSL(2,p) and PSL(2,49)
=======================================================

Three involutions w, m, n and an element r' of order 2 give a sequence
(wm, wn, wr') that generates the group irredundantly, while w itself can
replace none of its members.
"""

# %%
# Build the A5-based witness over F_29 and list the subgroups it checks.
from psl2rp import build_theorem24, build_theorem26
from psl2rp.cli import parse_matrix
from psl2rp.genseq import GenSequence, rp_check
from psl2rp.psl2 import make_group

rep = build_theorem24(29)
for name, sub in rep.subgroups.items():
    print(f"{name:14s} order {sub['order']:6d}  {sub['tag']}")

# %%
# Every claim is a named closure check.
for c in rep.claims:
    print("ok " if c.passed else "BAD", c.name, c.detail)

# %%
# Replacing each slot by the witness leaves a proper subgroup each time.
print("witness slot orders:", rep.rp.witness.slot_orders, "of", rep.group_order)

# %%
# The same construction over F_49.
rep49 = build_theorem26(7)
print(rep49.group, rep49.ok, rep49.rp.witness.slot_orders)

# %%
# The sequence is plain data and can be rechecked from its matrices.
ctx = make_group(7, 2)
codes = [ctx.canonicalize(parse_matrix(ctx.field, ",".join(row))).code for row in rep49.sequence]
print("satisfies RP:", rp_check(GenSequence.of(ctx, codes)).satisfies_rp)
