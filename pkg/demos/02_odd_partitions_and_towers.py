"""
Odd partitions and 2-quotient towers
====================================

Partitions labelling odd-degree characters, and the towers that detect them.
"""

from oddhooks.characters import degree
from oddhooks.partition import partitions
from oddhooks.tower import core_tower, enumerate_odd, is_odd, k_data, odd_count, quotient_tower

# of the 11 partitions of 6, eight have odd degree: 8 = 4 * 2
for p in partitions(6):
    print(f"{p!s:12} degree {degree(p):3}  odd: {is_odd(p)}")
print(len(enumerate_odd(6)), "==", odd_count(6))

# towers of the example (10,1,1): repeated 2-quotients and their 2-cores
lam = (10, 1, 1)
qt = quotient_tower(lam, 3)
ct = core_tower(lam, 3)
for k in range(4):
    print(f"row {k}: quotients {[str(x) for x in qt[k]]}  cores {[str(x) for x in ct[k]]}")
print("core sizes per row", ct.row_sizes)

# k-data: cores of rows below k, then row k of the quotient tower
print(k_data(lam, 1))

# the number of odd partitions is the product of the binary digits
print([len(enumerate_odd(n)) for n in range(1, 17)])
