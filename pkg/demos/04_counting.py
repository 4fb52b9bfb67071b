"""
Closed-form counts against brute force
======================================

How many odd partitions satisfy f_k f_k = f_(k+1), or make f_k, f_l commute.
"""

from oddhooks.counting import Fkl, Gk, T0l, omega_counts
from oddhooks.tower import odd_count
from oddhooks.verify import brute_F, brute_G, brute_omega

# the good set for f_2 on partitions of 24
print("G_2(24) =", Gk(24, 2), "brute force", brute_G(24, 2))

# non-commuting pairs f_2, f_3
for n in (24, 36):
    print(f"F_2,3({n}) = {Fkl(n, 2, 3)}  brute force {brute_F(n, 2, 3)}  of {odd_count(n)}")

# f_0 and f_l: the commuting set splits by type (1+, 1-, 2)
for n, l in [(20, 2), (24, 3), (40, 3)]:
    print(f"n={n} l={l}: T = {T0l(n, l)}, types {omega_counts(n, l)}, brute {brute_omega(n, l)}")
