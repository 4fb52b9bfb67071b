"""
Character values on 2-power classes
===================================

Murnaghan-Nakayama evaluation, and when a value has absolute value 1.
"""

from oddhooks.characters import factorized_magnitude, mn_value, omega, omega_variant, rho_gamma, theorem_A_check
from oddhooks.operators import in_G
from oddhooks.tower import enumerate_odd

lam = (10, 1, 1)

# odd partitions are exactly those with value +-1 on the binary-digit class
print("class", omega(12), "value", mn_value(lam, omega(12)))

# splitting the digit 4 of 12 into 2+2 gives value -1 even though f_1 f_1 != f_2
cls = omega_variant(12, 2)
print("class", cls, "value", mn_value(lam, cls), "f1 f1 = f2:", in_G(lam, 1))

# when n / 2^k is at most 4 the two sides do match
n, k = 12, 2
pairs = [theorem_A_check(p, k) for p in enumerate_odd(n)]
print(f"n={n} k={k}: {sum(a for a, _ in pairs)} good, all agree: {all(a == b for a, b in pairs)}")

# absolute values factor through the 2^k-core and tower row k
g = rho_gamma(12, 1)
for p in enumerate_odd(12)[:6]:
    print(p, abs(mn_value(p, g)), factorized_magnitude(p, 1))
