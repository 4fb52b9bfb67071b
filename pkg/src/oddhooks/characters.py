"""Exact character values of symmetric groups on 2-element classes.

Character values come from the Murnaghan-Nakayama rule: strip a rim hook
of the largest remaining cycle length, with sign ``(-1)**leg``, and
recurse.  All arithmetic is on Python integers.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Sequence

from .abacus import core, weight
from .operators import in_G
from .partition import Partition, hooks
from .tower import binary_digits, binary_exponents, is_odd, k_data

__all__ = [
    "CycleType",
    "parse_cycle_type",
    "mn_value",
    "degree",
    "omega",
    "omega_variant",
    "rho_gamma",
    "unit_value_criterion",
    "theorem_A_check",
    "factorized_magnitude",
    "clear_cache",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 40

_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


class CycleType(tuple):
    """Cycle lengths of a permutation, largest first."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(x) for x in parts), reverse=True)
        if any(x < 1 for x in parts):
            raise ValueError(f"cycle lengths must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"CycleType({tuple(self)!r})"

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"


def parse_cycle_type(text: str) -> CycleType:
    """Parse ``"8,2,2"`` or ``"8,2^2"``."""
    text = text.strip()
    if text in ("", "0"):
        return CycleType()
    parts = []
    for token in text.split(","):
        tok = token.strip()
        m = _TOKEN.match(tok)
        if not m or int(m.group(1)) == 0:
            raise ValueError(f"malformed cycle type token {tok!r} in {text!r}")
        parts += [int(m.group(1))] * (int(m.group(2)) if m.group(2) else 1)
    return CycleType(parts)


@lru_cache(maxsize=None)
def _mn(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    e, rest = cycles[0], cycles[1:]
    m = len(parts)
    beta = [parts[i] - i - 1 + m for i in range(m)]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - e
        if t < 0 or t in occupied:
            continue
        leg = sum(1 for x in beta if t < x < b)
        new = sorted(occupied - {b} | {t}, reverse=True)
        sub = tuple(v - (m - 1 - i) for i, v in enumerate(new))
        if sub and sub[-1] == 0:
            sub = sub[:-1]
        value = _mn(sub, rest)
        total += -value if leg & 1 else value
    return total


def clear_cache():
    _mn.cache_clear()


def mn_value(p: Sequence[int], c: Sequence[int], max_n: int | None = DEFAULT_MAX_N) -> int:
    """The character value of ``p`` on the class of cycle type ``c``.

    ``max_n`` caps the degree of the symmetric group; pass ``None`` to lift it.
    """
    p = Partition(p)
    c = CycleType(c)
    if p.size != c.size:
        raise ValueError(f"size mismatch: |p| = {p.size}, cycle type sums to {c.size}")
    if max_n is not None and p.size > max_n:
        raise ValueError(f"n = {p.size} exceeds the cap {max_n}")
    return _mn(tuple(p), tuple(c))


def degree(p: Sequence[int]) -> int:
    """Hook-length formula."""
    p = Partition(p)
    prod = 1
    for h in hooks(p):
        prod *= h.length
    return math.factorial(p.size) // prod


def omega(n: int) -> CycleType:
    """Cycle type made of the binary digits of ``n``."""
    return CycleType(binary_digits(n))


def omega_variant(n: int, i: int, k: int | None = None) -> CycleType:
    """The binary digits of ``n`` with the ``i``-th one (1-based) split in two halves."""
    a = binary_exponents(n)
    if not 1 <= i <= len(a) or a[i - 1] == 0:
        raise ValueError(f"no splittable binary digit number {i} in {n}")
    if k is None:
        k = a[i - 1] - 1
    if k != a[i - 1] - 1:
        raise ValueError(f"k must be a_{i} - 1 = {a[i - 1] - 1}")
    digits = [1 << x for x in a]
    digits[i - 1 : i] = [1 << k, 1 << k]
    return CycleType(digits)


def rho_gamma(n: int, k: int) -> CycleType:
    """``w = n // 2^k`` cycles of length ``2^k`` followed by the binary digits of the rest."""
    if k < 0 or (1 << k) > n:
        raise ValueError(f"need 0 <= k and 2^{k} <= {n}")
    w = n >> k
    return CycleType([1 << k] * w + binary_digits(n - (w << k)))


def _odd_with_k(p: Sequence[int], k: int) -> Partition:
    p = Partition(p)
    if not is_odd(p):
        raise ValueError(f"{p} is not an odd partition")
    if k < 0 or (1 << k) > p.size:
        raise ValueError(f"need 0 <= k and 2^{k} <= |p| = {p.size}")
    return p


def unit_value_criterion(p: Sequence[int], k: int) -> bool:
    """Whether a tower row-``k`` entry of ``p`` is ``(w)`` or ``(1^w)``, ``w = n // 2^k``."""
    p = _odd_with_k(p, k)
    w = p.size >> k
    row = (Partition([w]), Partition([1] * w))
    return any(x in row for x in k_data(p, k).last_row)


def theorem_A_check(p: Sequence[int], k: int, max_n: int | None = DEFAULT_MAX_N) -> tuple[bool, bool]:
    """``(f_k f_k p == f_{k+1} p, |chi^p(g)| == 1)`` with ``g`` of type :func:`rho_gamma`."""
    p = _odd_with_k(p, k)
    n = p.size
    if (2 << k) > n:
        raise ValueError(f"need 2^{k + 1} <= {n}")
    if n >> k > 4:
        raise ValueError(f"hypothesis violated: n // 2^k = {n >> k} > 4")
    return in_G(p, k), abs(mn_value(p, rho_gamma(n, k), max_n=max_n)) == 1


def factorized_magnitude(p: Sequence[int], k: int) -> int:
    """``|chi^p(rho gamma)|`` from the 2^k-core and tower row ``k``.

    ``rho`` is a product of ``n // 2^k`` cycles of length ``2^k`` and
    ``gamma`` has the binary digits of the remainder as cycle type.
    """
    p = Partition(p)
    n = p.size
    w = n >> k
    if weight(p, 1 << k) < w:
        return 0
    sizes = [x.size for x in k_data(p, k).last_row]
    multi = math.factorial(w)
    for s in sizes:
        multi //= math.factorial(s)
    c = core(p, 1 << k)
    value = multi * abs(_mn(tuple(c), tuple(omega(c.size))))
    for x in k_data(p, k).last_row:
        value *= degree(x)
    return value
