"""
Partitions, hooks and abaci
===========================

Hooks, beta-numbers and the abacus picture of cores and quotients.
"""

from oddhooks.abacus import core, normalized_abacus, quotient, weight
from oddhooks.partition import Partition, beta_set, hooks, parse_partition, remove_hook

# partitions parse from the comma syntax, exponents allowed
lam = parse_partition("4,2^2,1")
print(lam, "size", lam.size, "conjugate", lam.conjugate())

# every node carries a hook; removing one leaves a smaller partition
for h in hooks(lam):
    print(f"hook at ({h.row},{h.col}) length {h.length}: remove -> {remove_hook(lam, h)}")

# beta-numbers: first-column hook lengths
print("beta-numbers", beta_set(lam).values)

# on a 3-abacus, sliding a bead up one row removes a 3-hook
config = normalized_abacus(lam, 3)
print(config.render())
pushed, slides = config.push_up()
print("slides per runner", slides, "-> 3-core", pushed.partition())
print("core", core(lam, 3), "weight", weight(lam, 3))

# the quotient: runner partitions, in raw and in re-normalized order
q = quotient(lam, 3)
print("raw runners", [str(x) for x in q.raw])
print("3-quotient ", [str(x) for x in q.jk])
