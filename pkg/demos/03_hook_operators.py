"""
Removing odd hooks
==================

Each odd partition has exactly one 2^k-hook whose removal keeps it odd.
"""

from oddhooks.operators import classify_omega_type, f, f_abacus, f_with_hook, in_G, in_T, two_chain

lam = (10, 1, 1)

# f_k removes the unique odd 2^k-hook
for k in range(4):
    res, h = f_with_hook(k, lam)
    print(f"f_{k}: remove {h.length}-hook at ({h.row},{h.col}) -> {res}")

# the same result read off an abacus
assert all(f_abacus(k, lam) == f(k, lam) for k in range(4))

# applying f_1 twice is not the same as f_2 here
print("f1 f1:", f(1, f(1, lam)), " f2:", f(2, lam), " equal:", in_G(lam, 1))

# f_0 and f_l commute or not, and the type of the pair of odd hooks
for l in (1, 2, 3):
    print(f"l={l}: commute {in_T(lam, 0, l)}, type {classify_omega_type(lam, l)}")

# the 2-chain strips binary digits of |p| from the top
print(" -> ".join(map(str, two_chain(lam))))
