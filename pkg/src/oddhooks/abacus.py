"""Bounded e-abacus configurations, bead slides, cores and quotients.

Rows are labelled ``-a .. a`` from top to bottom and runners ``0 .. e-1``
from left to right.  Position numbers run left to right, top to bottom:
``position(row, runner) = e * (row + a) + runner``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .partition import Partition, from_beta_set

__all__ = [
    "AbacusConfig",
    "QuotientTuple",
    "default_row_bound",
    "abacus_for",
    "normalized_abacus",
    "core",
    "weight",
    "quotient",
    "core_and_quotient",
    "from_core_and_quotient",
    "runner_partition",
]


def default_row_bound(n: int, e: int) -> int:
    return -(-(n + e) // e) + 1


@dataclass(frozen=True)
class AbacusConfig:
    runners: int
    row_bound: int
    beads: tuple[int, ...]  # sorted position numbers

    def __post_init__(self):
        if self.runners < 1 or self.row_bound < 0:
            raise ValueError("need runners >= 1 and row_bound >= 0")
        b = self.beads
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            raise ValueError("beads must be sorted and distinct")
        if b and (b[0] < 0 or b[-1] >= self.n_positions):
            raise ValueError("bead outside the abacus")

    @property
    def n_positions(self) -> int:
        return self.runners * (2 * self.row_bound + 1)

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def position(self, row: int, runner: int) -> int:
        if not (-self.row_bound <= row <= self.row_bound and 0 <= runner < self.runners):
            raise ValueError(f"({row},{runner}) is off the abacus")
        return self.runners * (row + self.row_bound) + runner

    def coords(self, pos: int) -> tuple[int, int]:
        row, runner = divmod(pos, self.runners)
        return row - self.row_bound, runner

    def has_bead(self, pos: int) -> bool:
        i = bisect_left(self.beads, pos)
        return i < len(self.beads) and self.beads[i] == pos

    def first_gap(self) -> int:
        for i, b in enumerate(self.beads):
            if b != i:
                return i
        return len(self.beads)

    def partition(self) -> Partition:
        """Each bead contributes a part equal to the number of gaps before it."""
        return from_beta_set(self.beads)

    def is_normalized(self) -> bool:
        return self.first_gap() == self.position(0, 0)

    def slide_left(self, pos: int, y: int) -> "AbacusConfig":
        """Move the bead at ``pos`` to position ``pos - y``, which must be a gap."""
        if not self.has_bead(pos):
            raise ValueError(f"no bead at position {pos}")
        target = pos - y
        if not 0 <= target < self.n_positions:
            raise ValueError(f"target position {target} is off the abacus")
        if self.has_bead(target):
            raise ValueError(f"target position {target} is occupied")
        return self._moved(pos, target)

    def slide_up(self, pos: int) -> "AbacusConfig":
        return self.slide_left(pos, self.runners)

    def slide_down(self, pos: int) -> "AbacusConfig":
        return self.slide_left(pos, -self.runners)

    def _moved(self, source: int, target: int) -> "AbacusConfig":
        beads = sorted(set(self.beads) - {source} | {target})
        return AbacusConfig(self.runners, self.row_bound, tuple(beads))

    def runner_rows(self, j: int) -> list[int]:
        """Rows (top to bottom) of the beads on runner ``j``."""
        e = self.runners
        return [b // e - self.row_bound for b in self.beads if b % e == j]

    def runner_partition(self, j: int) -> Partition:
        """Partition of runner ``j`` read as a 1-abacus."""
        return from_beta_set([r + self.row_bound for r in self.runner_rows(j)])

    def _rows_by_runner(self) -> list[list[int]]:
        e = self.runners
        out = [[] for _ in range(e)]
        for b in self.beads:
            out[b % e].append(b // e - self.row_bound)
        return out

    def runner_partitions(self) -> tuple[Partition, ...]:
        a = self.row_bound
        return tuple(from_beta_set([r + a for r in rows]) for rows in self._rows_by_runner())

    def push_up(self) -> tuple["AbacusConfig", tuple[int, ...]]:
        """Slide every bead as high as possible; also return slides per runner."""
        e, a = self.runners, self.row_bound
        beads, counts = [], []
        for j, rows in enumerate(self._rows_by_runner()):
            counts.append(sum(r - (i - a) for i, r in enumerate(rows)))
            beads.extend(e * i + j for i in range(len(rows)))
        return AbacusConfig(e, a, tuple(sorted(beads))), tuple(counts)

    def weight(self) -> int:
        return sum(self.push_up()[1])

    def render(self) -> str:
        """Text grid, one line per row: ``•`` for a bead, ``·`` for a gap."""
        lines = []
        width = len(str(self.row_bound)) + 1
        for row in range(-self.row_bound, self.row_bound + 1):
            cells = " ".join(
                "•" if self.has_bead(self.position(row, j)) else "·" for j in range(self.runners)
            )
            lines.append(f"{row:>{width}} | {cells}")
        return "\n".join(lines)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class QuotientTuple:
    """Runner partitions of the normalized abacus together with the e-quotient.

    ``raw[j]`` equals ``jk[(j - len(p)) % e]``: the normalized abacus carries
    ``e*a + len(p)`` beads.
    """

    e: int
    raw: tuple[Partition, ...]
    jk: tuple[Partition, ...]

    @property
    def weight(self) -> int:
        return sum(q.size for q in self.jk)

    def __iter__(self):
        return iter(self.jk)

    def __getitem__(self, i):
        return self.jk[i]

    def __len__(self):
        return self.e


def _fit_row_bound(max_pos: int, e: int, a: int) -> int:
    # smallest bound >= a holding position max_pos with a free row of slack
    while e * (2 * a + 1) <= max_pos + e:
        a += 1
    return a


def abacus_for(p: Sequence[int], e: int, beads: int, row_bound: int | None = None) -> AbacusConfig:
    """The e-abacus configuration for ``p`` with exactly ``beads`` beads."""
    p = Partition(p)
    if beads < len(p):
        raise ValueError(f"need at least {len(p)} beads for {p}")
    values = [(p[i] if i < len(p) else 0) - (i + 1) + beads for i in range(beads)]
    top = values[0] if values else 0
    a = default_row_bound(p.size, e) if row_bound is None else row_bound
    if row_bound is None:
        a = _fit_row_bound(top, e, a)
    return AbacusConfig(e, a, tuple(sorted(values)))


def normalized_abacus(p: Sequence[int], e: int, row_bound: int | None = None) -> AbacusConfig:
    """The e-abacus for ``p`` with its first gap in position ``(0, 0)``."""
    p = Partition(p)
    a = default_row_bound(p.size, e) if row_bound is None else row_bound
    return abacus_for(p, e, e * a + len(p), row_bound=a)


def runner_partition(config: AbacusConfig, j: int) -> Partition:
    return config.runner_partition(j)


@lru_cache(maxsize=None)
def _core(p: Partition, e: int) -> Partition:
    return normalized_abacus(p, e).push_up()[0].partition()


def core(p: Sequence[int], e: int) -> Partition:
    return _core(Partition(p), e)


def weight(p: Sequence[int], e: int) -> int:
    return normalized_abacus(p, e).weight()


def quotient(p: Sequence[int], e: int) -> QuotientTuple:
    p = Partition(p)
    raw = normalized_abacus(p, e).runner_partitions()
    m = -(-len(p) // e) * e
    jk = abacus_for(p, e, m).runner_partitions()
    return QuotientTuple(e, raw, jk)


def core_and_quotient(p: Sequence[int], e: int) -> tuple[Partition, tuple[Partition, ...]]:
    p = Partition(p)
    m = -(-len(p) // e) * e
    config = abacus_for(p, e, m)
    return config.push_up()[0].partition(), config.runner_partitions()


def from_core_and_quotient(c: Sequence[int], q: Sequence[Sequence[int]], e: int) -> Partition:
    """Rebuild the partition with e-core ``c`` and (JK-ordered) e-quotient ``q``."""
    c = Partition(c)
    q = [Partition(x) for x in q]
    if len(q) != e:
        raise ValueError(f"quotient must have {e} components")
    rows = -(-len(c) // e) + max((len(x) for x in q), default=0)
    base = abacus_for(c, e, e * rows).push_up()[0]
    if base.partition() != c:
        raise ValueError(f"{c} is not an {e}-core")
    values = []
    for j, mu in enumerate(q):
        count = sum(1 for b in base.beads if b % e == j)
        for i in range(count):
            level = (mu[i] if i < len(mu) else 0) - (i + 1) + count
            values.append(e * level + j)
    return from_beta_set(values)
