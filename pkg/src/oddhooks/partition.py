"""Partitions, Young diagrams, hooks and beta-sets.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Rows and columns of the Young diagram are 1-based, matrix
orientation, node ``(1, 1)`` in the upper left corner.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Partition",
    "HookRef",
    "BetaSet",
    "parse_partition",
    "conjugate",
    "hooks",
    "hooks_of_length",
    "hooks_of_length_divisible",
    "remove_hook",
    "beta_set",
    "from_beta_set",
    "partitions",
    "hook_partition",
]

_EMPTY_TOKENS = ("", "0", "∅")
_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


class Partition(tuple):
    """A partition of ``sum(self)``; behaves as a tuple of its parts.

    Trailing zeros are dropped, so ``Partition([3, 1, 0])`` is ``(3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"parts must be positive, got {x}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self)

    def part(self, row: int) -> int:
        """Length of ``row`` (1-based); zero below the diagram."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def nodes(self) -> Iterator[tuple[int, int]]:
        for r, u in enumerate(self, 1):
            for c in range(1, u + 1):
                yield r, c

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format(self, "")

    def __format__(self, spec):
        """``format(p)`` gives ``10,1,1``; ``format(p, "exp")`` gives ``10,1^2``."""
        if not self:
            return "0"
        if spec != "exp":
            return ",".join(map(str, self))
        out = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            out.append(str(self[i]) if j - i == 1 else f"{self[i]}^{j - i}")
            i = j
        return ",".join(out)

    def to_json(self) -> list[int]:
        return list(self)


class HookRef(NamedTuple):
    """The hook at node ``(row, col)``."""

    row: int
    col: int
    length: int
    arm: int
    leg: int


@dataclass(frozen=True)
class BetaSet:
    """A strictly decreasing sequence of non-negative beta-numbers."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if any(x < 0 for x in v) or any(v[i] <= v[i + 1] for i in range(len(v) - 1)):
            raise ValueError(f"beta-numbers must be distinct, decreasing, >= 0: {v}")

    @property
    def bead_count(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)


def parse_partition(text: str) -> Partition:
    """Parse ``"10,1^2"``-style text; ``""``, ``"0"`` and ``"∅"`` are the empty partition.

    Raises ``ValueError`` naming the first offending token.
    """
    text = text.strip()
    if text in _EMPTY_TOKENS:
        return Partition()
    parts: list[int] = []
    for token in text.split(","):
        tok = token.strip()
        m = _TOKEN.match(tok)
        if not m or int(m.group(1)) == 0:
            raise ValueError(f"malformed partition token {tok!r} in {text!r}")
        part = int(m.group(1))
        if parts and part > parts[-1]:
            raise ValueError(f"partition token {tok!r} in {text!r} breaks the weakly decreasing order")
        parts.extend([part] * (int(m.group(2)) if m.group(2) else 1))
    return Partition(parts)


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for u in p if u >= c) for c in range(1, p[0] + 1))


def hooks(p: Partition) -> list[HookRef]:
    """One :class:`HookRef` per node, in row-major order."""
    q = conjugate(p)
    out = []
    for r, u in enumerate(p, 1):
        for c in range(1, u + 1):
            arm = u - c
            leg = q[c - 1] - r
            out.append(HookRef(r, c, arm + leg + 1, arm, leg))
    return out


def hooks_of_length(p: Partition, e: int, divisible: bool = False) -> list[HookRef]:
    """Hooks of length ``e``; with ``divisible=True``, hooks of length a multiple of ``e``."""
    if divisible:
        return [h for h in hooks(p) if h.length % e == 0]
    return [h for h in hooks(p) if h.length == e]


def hooks_of_length_divisible(p: Partition, e: int) -> list[HookRef]:
    return hooks_of_length(p, e, divisible=True)


def remove_hook(p: Partition, h: HookRef | tuple[int, int]) -> Partition:
    """Remove the rim hook of ``p`` belonging to node ``h``.

    ``h`` may be a :class:`HookRef` or a bare ``(row, col)`` pair.  Rows
    ``r .. r+leg`` of the result are ``p[r+1]-1, ..., p[r+leg]-1, c-1``.
    """
    r, c = h[0], h[1]
    if not (1 <= r <= len(p) and 1 <= c <= p[r - 1]):
        raise ValueError(f"({r},{c}) is not a node of {p}")
    leg = sum(1 for u in p[r:] if u >= c)
    parts = list(p)
    for i in range(r - 1, r - 1 + leg):
        parts[i] = p[i + 1] - 1
    parts[r - 1 + leg] = c - 1
    return Partition(parts)


def beta_set(p: Partition, beads: int | None = None) -> BetaSet:
    """Beta-numbers ``p_i - i + beads`` for ``i = 1..beads``.

    With ``beads == len(p)`` (the default) these are the first-column hook lengths.
    """
    m = len(p) if beads is None else beads
    if m < len(p):
        raise ValueError(f"need at least {len(p)} beads for {p}, got {m}")
    return BetaSet(tuple((p[i] if i < len(p) else 0) - (i + 1) + m for i in range(m)))


def from_beta_set(b: BetaSet | Iterable[int]) -> Partition:
    """Inverse of :func:`beta_set`; each bead contributes the number of gaps below it."""
    values = sorted(b.values if isinstance(b, BetaSet) else b, reverse=True)
    m = len(values)
    return Partition(v - (m - 1 - i) for i, v in enumerate(values))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, max_part):
        yield Partition(parts)


def hook_partition(n: int, w: int) -> Partition:
    """The hook ``(n - w, 1^w)``."""
    if not 0 <= w < max(n, 1):
        raise ValueError(f"leg length {w} out of range for a hook of {n}")
    if n == 0:
        return Partition()
    return Partition([n - w] + [1] * w)
