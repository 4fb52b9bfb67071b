"""2-quotient towers, 2-core towers, k-data and odd partitions.

Row ``k`` of a tower holds ``2**k`` partitions produced by repeatedly
taking 2-quotients: the children of entry ``i`` are the two components of
its 2-quotient, in order.  This is *not* the runner order of the
``2**k``-quotient once ``k >= 2``; :func:`tower_runner_indices` gives
the translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .abacus import core_and_quotient
from .partition import Partition, partitions

__all__ = [
    "QuotientTower",
    "CoreTower",
    "KData",
    "KType",
    "two_quotient",
    "quotient_tower",
    "core_tower",
    "k_data",
    "tower_runner_indices",
    "is_odd",
    "k_type",
    "binary_digits",
    "binary_exponents",
    "two_disjoint",
    "pairwise_two_disjoint",
    "odd_count",
    "enumerate_odd",
    "enumerate_odd_by_type",
    "enumerate_odd_filtered",
    "k_types",
]


def binary_exponents(n: int) -> list[int]:
    """Exponents ``a_1 > a_2 > ... > a_r`` with ``n = sum(2**a_i)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [a for a in range(n.bit_length() - 1, -1, -1) if n >> a & 1]


def binary_digits(n: int) -> list[int]:
    """The binary digits ``2**a_i`` of ``n``, largest first."""
    return [1 << a for a in binary_exponents(n)]


def two_disjoint(a: int, b: int) -> bool:
    return a & b == 0


def pairwise_two_disjoint(values: Sequence[int]) -> bool:
    seen = 0
    for v in values:
        if seen & v:
            return False
        seen |= v
    return True


def odd_count(n: int) -> int:
    """Number of odd partitions of ``n``: the product of its binary digits."""
    return 1 << sum(binary_exponents(n))


@lru_cache(maxsize=None)
def _q2(p: Partition) -> tuple[Partition, Partition, Partition]:
    c, (q0, q1) = core_and_quotient(p, 2)
    return c, q0, q1


def two_quotient(p: Sequence[int]) -> tuple[Partition, Partition]:
    _, q0, q1 = _q2(Partition(p))
    return q0, q1


@dataclass(frozen=True)
class QuotientTower:
    rows: tuple[tuple[Partition, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, k):
        return self.rows[k]

    def to_json(self):
        return [[list(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class CoreTower:
    rows: tuple[tuple[Partition, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    @property
    def row_sizes(self) -> tuple[int, ...]:
        """``c^(k)``: total size of the cores in row ``k``."""
        return tuple(sum(x.size for x in row) for row in self.rows)

    def __getitem__(self, k):
        return self.rows[k]

    def to_json(self):
        return [[list(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class KData:
    """Core rows ``0 .. k-1`` followed by quotient-tower row ``k``."""

    k: int
    core_rows: tuple[tuple[Partition, ...], ...]
    last_row: tuple[Partition, ...]

    @property
    def rows(self):
        return self.core_rows + (self.last_row,)

    def to_json(self):
        return [[list(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class KType:
    k: int
    parts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_two_disjoint(self) -> bool:
        return pairwise_two_disjoint(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def _rows(p: Partition, depth: int):
    qrows = [(p,)]
    crows = []
    for _ in range(depth + 1):
        row = qrows[-1]
        split = [_q2(x) for x in row]
        crows.append(tuple(c for c, _, _ in split))
        if len(qrows) <= depth:
            qrows.append(tuple(y for _, q0, q1 in split for y in (q0, q1)))
    return qrows, crows


def quotient_tower(p: Sequence[int], depth: int) -> QuotientTower:
    if depth < 0:
        raise ValueError("depth must be >= 0")
    qrows, _ = _rows(Partition(p), depth)
    return QuotientTower(tuple(qrows))


def core_tower(p: Sequence[int], depth: int) -> CoreTower:
    if depth < 0:
        raise ValueError("depth must be >= 0")
    _, crows = _rows(Partition(p), depth)
    return CoreTower(tuple(crows))


@lru_cache(maxsize=None)
def _k_data(p: Partition, k: int) -> KData:
    qrows, crows = _rows(p, k)
    return KData(k, tuple(crows[:k]), qrows[k])


def k_data(p: Sequence[int], k: int) -> KData:
    if k < 0:
        raise ValueError("k must be >= 0")
    return _k_data(Partition(p), k)


def tower_runner_indices(p: Sequence[int], k: int) -> list[int]:
    """Map tower row ``k`` onto the ``2**k``-quotient.

    Entry ``i`` of the result is the index ``j`` with
    ``quotient_tower(p, k)[k][i] == quotient(p, 2**k).jk[j]``.  Each tower
    node is tracked as the residue class of beta-numbers it collects plus
    the number of beads added when its own 2-quotient is normalized to an
    even bead count.
    """
    p = Partition(p)
    e = 1 << k
    m = -(-len(p) // e) * e
    betas = [(p[i] if i < len(p) else 0) - (i + 1) + m for i in range(m)]
    nodes = [(0, 0)]  # (residue, extra beads)
    for s in range(k):
        mod = 1 << s
        nxt = []
        for r, extra in nodes:
            count = sum(1 for b in betas if b % mod == r) + extra
            if count % 2:
                extra += 1
            if extra % 2 == 0:
                nxt += [(r, extra // 2), (r + mod, extra // 2)]
            else:
                nxt += [(r + mod, (extra + 1) // 2), (r, (extra - 1) // 2)]
        nodes = nxt
    return [r for r, _ in nodes]


@lru_cache(maxsize=None)
def _is_odd(p: Partition) -> bool:
    n = p.size
    if n == 0:
        return True
    k = n.bit_length()  # floor(log2 n) + 1
    qrows, crows = _rows(p, k)
    if any(sum(c.size for c in row) > 1 for row in crows[:k]):
        return False
    last = qrows[k]
    if not pairwise_two_disjoint([x.size for x in last]):
        return False
    return all(_is_odd(x) for x in last)


def is_odd(p: Sequence[int]) -> bool:
    """True iff the character labelled by ``p`` has odd degree.

    Uses the k-data criterion with ``k = floor(log2 n) + 1``: row-``j`` core
    sizes at most 1 for ``j < k``, odd and pairwise 2-disjoint row-``k``
    entries.
    """
    return _is_odd(Partition(p))


def k_type(p: Sequence[int], k: int) -> KType:
    p = Partition(p)
    if p and (1 << k) > p.size:
        raise ValueError(f"2^{k} exceeds |p| = {p.size}")
    return KType(k, tuple(x.size for x in k_data(p, k).last_row))


def _extensions_of(g: Partition, t: int) -> list[Partition]:
    # local import: operators depends on this module
    from .operators import extensions

    return extensions(g, t)


@lru_cache(maxsize=None)
def _enumerate_odd(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    t = n.bit_length() - 1
    out = []
    for g in _enumerate_odd(n - (1 << t)):
        out.extend(_extensions_of(g, t))
    return tuple(sorted(out, reverse=True))


def enumerate_odd(n: int) -> list[Partition]:
    """Odd partitions of ``n``, sorted reverse-lexicographically.

    Built by adjoining a ``2**a_1``-hook to every odd partition of
    ``n - 2**a_1`` in all possible ways.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate_odd(n))


def enumerate_odd_filtered(n: int) -> list[Partition]:
    """Odd partitions of ``n`` found by testing every partition of ``n``."""
    return [p for p in partitions(n) if is_odd(p)]


def enumerate_odd_by_type(n: int, ktype: KType | Sequence[int]) -> list[Partition]:
    if isinstance(ktype, KType):
        k, parts = ktype.k, tuple(ktype.parts)
    else:
        parts = tuple(ktype)
        k = len(parts).bit_length() - 1
        if 1 << k != len(parts):
            raise ValueError("a k-type has 2^k parts")
    return [p for p in enumerate_odd(n) if k_type(p, k).parts == parts]


def k_types(size: int, k: int) -> Iterator[tuple[int, ...]]:
    """2-disjoint weak compositions of ``size`` into ``2**k`` parts."""
    digits = binary_digits(size)
    slots = 1 << k

    def place(i, acc):
        if i == len(digits):
            yield tuple(acc)
            return
        for s in range(slots):
            acc[s] += digits[i]
            yield from place(i + 1, acc)
            acc[s] -= digits[i]

    yield from sorted(set(place(0, [0] * slots)), reverse=True)
