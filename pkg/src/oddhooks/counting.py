"""Closed-form counts of odd partitions with prescribed operator relations.

Notation follows the binary expansion ``n = 2**a_1 + ... + 2**a_r`` with
``a_1 > ... > a_r``.  Index sets are 1-based, as are ``p`` and ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .tower import binary_exponents, odd_count

__all__ = [
    "DigitProfile",
    "G0",
    "wG",
    "Gk",
    "T0l",
    "F0l",
    "wF",
    "Fkl",
    "Tkl",
    "F_reduction",
    "omega_counts",
    "unit_value_count",
    "subsets_containing",
]


@dataclass(frozen=True)
class DigitProfile:
    """Binary expansion of ``n`` with the indices ``p <= q`` marked.

    ``p`` is the largest index with ``a_p >= p_bound`` and ``q`` the largest
    with ``a_q >= k``; ``p_bound`` is ``k + 1`` when counting ``G_k`` and
    ``l`` when counting ``F_{k,l}``.
    """

    n: int
    k: int
    p_bound: int
    a: tuple[int, ...]
    p: int
    q: int

    @classmethod
    def build(cls, n: int, k: int, p_bound: int) -> "DigitProfile":
        a = tuple(binary_exponents(n))
        ps = [i for i, x in enumerate(a, 1) if x >= p_bound]
        qs = [i for i, x in enumerate(a, 1) if x >= k]
        if not ps:
            raise ValueError(f"{n} has no binary digit 2^a with a >= {p_bound}")
        return cls(n, k, p_bound, a, ps[-1], qs[-1])

    @classmethod
    def for_G(cls, n: int, k: int) -> "DigitProfile":
        return cls.build(n, k, k + 1)

    @classmethod
    def for_F(cls, n: int, k: int, l: int) -> "DigitProfile":
        return cls.build(n, k, l)

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def b(self) -> tuple[int, ...]:
        """``b_j = a_j - k`` for ``j <= q`` (so ``b[j - 1]`` is ``b_j``)."""
        return tuple(x - self.k for x in self.a[: self.q])

    @property
    def I(self) -> tuple[int, ...]:
        return tuple(range(1, self.q + 1))

    @property
    def nbar(self) -> int:
        return sum(1 << x for x in self.a[: self.q])

    @property
    def core_factor(self) -> int:
        """Product of the binary digits of ``n`` below ``2**k``."""
        return 1 << sum(self.a[self.q :])


def subsets_containing(required: Iterable[int], universe: Iterable[int]) -> Iterator[tuple[int, ...]]:
    req = sorted(set(required))
    free = [i for i in universe if i not in req]
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            yield tuple(sorted(req + list(extra)))


def _G0_base(u: int) -> int:
    if u in (2, 3):
        return 2
    if u & (u - 1) == 0:
        return u >> 1
    if (u - 1) & (u - 2) == 0:
        return 4
    raise ValueError(f"{u} is not of the form 2^t or 2^t + 1")


def G0(n: int) -> int:
    """Number of odd partitions of ``n`` with ``f_0 f_0 = f_1``."""
    if n < 2:
        raise ValueError("G0 needs n >= 2")
    eps = n & 1
    a = binary_exponents(n - eps)
    value = _G0_base((1 << a[-1]) + eps)
    for x in a[:-1]:
        value *= (1 << x) - 2
    return value


def _weight(J, profile: DigitProfile, k: int, base) -> int:
    J = set(J)
    b = profile.b
    rest = [i for i in profile.I if i not in J]
    value = ((1 << k) - 1) ** len(rest)
    for i in rest:
        value <<= b[i - 1]
    return value * base(sum(1 << b[j - 1] for j in J))


def wG(J: Iterable[int], profile: DigitProfile, k: int) -> int:
    return _weight(J, profile, k, G0)


def Gk(n: int, k: int) -> int:
    """Number of odd partitions of ``n`` with ``f_k f_k = f_{k+1}``."""
    if k < 0 or (2 << k) > n:
        raise ValueError(f"need k >= 0 and 2^{k + 1} <= {n}")
    prof = DigitProfile.for_G(n, k)
    total = sum(wG(J, prof, k) for J in subsets_containing({prof.p, prof.q}, prof.I))
    return prof.core_factor * (total << k)


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def _T0l(n: int, l: int) -> int:
    # sizes up to 2^l count every odd partition
    if n <= 1 << l:
        return odd_count(n)
    a = binary_exponents(n)
    r = len(a)
    if a[-1] > l:
        return (1 << (a[-1] - 1)) * (
            _prod((1 << x) - 3 for x in a[:-1]) + _prod(1 << x for x in a[:-1])
        )
    if a[-1] == l:
        return (1 << (l + 1)) * (_prod(1 << x for x in a[: r - 2]) + _prod((1 << x) - 3 for x in a[: r - 2]))
    p = max(i for i, x in enumerate(a, 1) if x >= l)
    head = a[: p - 1]
    return (
        ((1 << l) - 2) * (1 << (a[p - 1] - l)) * _prod(1 << x for x in head)
        + 2 * _prod((1 << x) - 3 for x in head)
    ) * _prod(1 << x for x in a[p:])


def T0l(n: int, l: int) -> int:
    """Number of odd partitions of ``n`` on which ``f_0`` and ``f_l`` commute.

    Needs ``0 < l <= a_1``; for ``n == 2**l`` every odd partition counts.
    """
    a = binary_exponents(n)
    if not a or not 0 < l <= a[0]:
        raise ValueError(f"need 0 < l <= {a[0] if a else '-'} (largest exponent of n)")
    return _T0l(n, l)


def F0l(n: int, l: int) -> int:
    """``|O(n)| - T_{0,l}(n)``, zero for ``n <= 2**l``."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return odd_count(n) - _T0l(n, l)


def wF(J: Iterable[int], profile: DigitProfile, k: int, l: int) -> int:
    return _weight(J, profile, k, lambda u: F0l(u, l - k))


def _all_commute(n: int, k: int, l: int) -> bool:
    t = n.bit_length() - 1
    m = n - (1 << t)
    return m < (1 << k) or l == t or (n == 6 and (k, l) == (0, 1))


def _check_kl(n: int, k: int, l: int):
    if not 0 <= k < l or (1 << k) + (1 << l) > n:
        raise ValueError(f"need 0 <= k < l and 2^k + 2^l <= {n}")


def F_reduction(n: int, k: int, l: int) -> int:
    """The reduction formula for ``F_{k,l}(n)`` in terms of ``F_{0,l-k}``.

    Valid for ``k < l < a_1`` and ``n - 2**a_1 >= 2**k``; :func:`Fkl`
    dispatches the remaining cases.
    """
    _check_kl(n, k, l)
    prof = DigitProfile.for_F(n, k, l)
    p, q, a, b = prof.p, prof.q, prof.a, prof.b
    if a[p - 1] > a[q - 1] or a[p - 1] > l:
        total = sum(wF(J, prof, k, l) for J in subsets_containing({p, q}, prof.I))
        return prof.core_factor * (total << k)
    if p < 2:
        raise ValueError("a_p = a_q = l needs p >= 2")
    total = sum(wF(J, prof, k, l) for J in subsets_containing({p - 1, p}, prof.I))
    extra = (1 << (k * (q - 1))) * ((1 << k) - 1) * (1 << sum(b))
    return prof.core_factor * ((total << k) + extra)


def Fkl(n: int, k: int, l: int) -> int:
    """Number of odd partitions of ``n`` on which ``f_k`` and ``f_l`` do not commute."""
    _check_kl(n, k, l)
    if _all_commute(n, k, l):
        return 0
    if k == 0:
        return F0l(n, l)
    return F_reduction(n, k, l)


def Tkl(n: int, k: int, l: int) -> int:
    return odd_count(n) - Fkl(n, k, l)


def omega_counts(n: int, l: int) -> tuple[int, int, int]:
    """Sizes of the commuting sets of type ``(1+, 1-, 2)`` for ``f_0, f_l``."""
    if l < 1 or n < (1 << l):
        raise ValueError(f"need l >= 1 and n >= 2^l")
    t = n.bit_length() - 1
    m = n - (1 << t)
    if m == 0:
        if t == l:
            return 1 << (t - 1), 1 << (t - 1), 0
        return 1 << (t - 2), 1 << (t - 2), 1 << (t - 1)
    if m < (1 << l):
        o = odd_count(m)
        return o, o, o * ((1 << l) - 2) * (1 << (t - l))
    if m == (1 << l):
        return 1 << l, 1 << l, 1 << (l + 1)
    plus, minus, two = omega_counts(m, l)
    f = (1 << t) - 3
    return f * plus, f * minus, two << t


def unit_value_count(n: int, k: int) -> int:
    """Number of odd partitions of ``n`` with value of absolute value 1 on the
    class of ``n // 2^k`` cycles of length ``2^k`` times the binary digits of
    the rest."""
    if k < 0 or (1 << k) > n:
        raise ValueError(f"need 0 <= k and 2^{k} <= {n}")
    w = n >> k
    kp = k if w == 1 else k + 1
    return (1 << kp) * odd_count(n & ((1 << k) - 1))
