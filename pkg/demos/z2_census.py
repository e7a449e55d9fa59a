"""
Classical gates over Z2
=======================

Enumerate every gate on two bits, sort out the reversible and linear ones,
and look at the six invertible matrices as a group.
"""
from qdesk import z2

# 4**4 = 256 truth tables map two bits to two bits
print(z2.census_report())

# permutations of the four words are exactly the reversible gates
reversible = [tt for tt in z2.enumerate_gates(2, 2) if z2.is_reversible(tt)]
print(len(reversible), "reversible gates")

# the six invertible matrices, with products read left to right
mats, table = z2.six_group()
for name, m in mats.items():
    print(name, m.tolist())
print("K(LM) =", z2.compose("K", z2.compose("L", "M")))

# the Toffoli gate computes NAND when its target starts at 1
print("NAND via Toffoli:", [z2.nand_via_toffoli(x, y) for x in (0, 1) for y in (0, 1)])

# OR built from NAND gates alone
print("OR =", z2.synth_from_nand(z2.named_tt("or")))
