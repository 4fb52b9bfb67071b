"""Hook-removal operators on odd partitions.

For an odd partition ``p`` and ``2**k <= |p|`` there is exactly one
``2**k``-hook whose removal leaves an odd partition; ``f(k, p)`` removes it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Sequence

from .abacus import AbacusConfig, normalized_abacus
from .partition import HookRef, Partition, hooks, hooks_of_length, remove_hook
from .tower import binary_exponents, is_odd, k_data

__all__ = [
    "OddHookData",
    "odd_hooks",
    "f",
    "f_with_hook",
    "f_abacus",
    "odd_bead",
    "f_hook_shortcut",
    "two_chain",
    "odd_hook_data",
    "R_component",
    "in_G",
    "in_T",
    "classify_omega_type",
    "extensions",
    "extensions_with_runner",
]


class OddHookData(NamedTuple):
    row: int  # z_k
    col: int  # s_k
    first_column_hook: int  # r_k = h_{z_k, 1}


def _as_odd(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not is_odd(p):
        raise ValueError(f"{p} is not an odd partition")
    return p


def _check_k(p: Partition, k: int):
    if k < 0 or (1 << k) > p.size:
        raise ValueError(f"need 0 <= k and 2^{k} <= |p| = {p.size}")


def odd_hooks(p: Sequence[int], e: int) -> list[HookRef]:
    """Hooks of length ``e`` whose removal leaves an odd partition."""
    p = Partition(p)
    return [h for h in hooks_of_length(p, e) if is_odd(remove_hook(p, h))]


@lru_cache(maxsize=None)
def _f(k: int, p: Partition) -> tuple[Partition, HookRef]:
    found = odd_hooks(p, 1 << k)
    if len(found) != 1:
        raise AssertionError(f"{p} has {len(found)} odd 2^{k}-hooks")
    h = found[0]
    return remove_hook(p, h), h


def f_with_hook(k: int, p: Sequence[int]) -> tuple[Partition, HookRef]:
    """``f(k, p)`` together with the hook that was removed."""
    p = _as_odd(p)
    _check_k(p, k)
    return _f(k, p)


def f(k: int, p: Sequence[int]) -> Partition:
    return f_with_hook(k, p)[0]


def odd_bead(config: AbacusConfig, k: int) -> int:
    """Position of the bead whose ``2**k``-slide left gives an odd partition."""
    y = 1 << k
    found = [
        b
        for b in config.beads
        if b >= y and not config.has_bead(b - y) and is_odd(config.slide_left(b, y).partition())
    ]
    if len(found) != 1:
        raise ValueError(f"expected one odd {y}-slide, found {len(found)}")
    return found[0]


def f_abacus(k: int, p: Sequence[int], e: int | None = None) -> Partition:
    """``f(k, p)`` computed by sliding beads on a normalized e-abacus."""
    p = _as_odd(p)
    _check_k(p, k)
    config = normalized_abacus(p, e or p.size + 1)
    return config.slide_left(odd_bead(config, k), 1 << k).partition()


def f_hook_shortcut(k: int, p: Sequence[int]) -> Partition:
    """Closed form of ``f(k, (2^t - w, 1^w))`` for ``k < t``."""
    p = Partition(p)
    n = p.size
    if not p or n & (n - 1) or not p.is_hook():
        raise ValueError(f"{p} is not a hook partition of a power of 2")
    t = n.bit_length() - 1
    if not 0 <= k < t:
        raise ValueError(f"need 0 <= k < t = {t}")
    w = len(p) - 1
    if w >> k & 1:
        return Partition([n - w] + [1] * (w - (1 << k)))
    return Partition([n - w - (1 << k)] + [1] * w)


def two_chain(p: Sequence[int]) -> list[Partition] | None:
    """The partitions ``p = p^1, ..., p^r, ()`` obtained by removing hooks of
    the binary digits of ``|p|``, largest first, or ``None`` if some step has
    no such hook.  Each step has at most one candidate."""
    p = Partition(p)
    chain = [p]
    for a in binary_exponents(p.size):
        cands = hooks_of_length(chain[-1], 1 << a)
        if not cands:
            return None
        chain.append(remove_hook(chain[-1], cands[0]))
    return chain


def odd_hook_data(p: Sequence[int], k: int) -> OddHookData:
    p = Partition(p)
    _, h = f_with_hook(k, p)
    first_col = next(x.length for x in hooks(p) if x.row == h.row and x.col == 1)
    return OddHookData(h.row, h.col, first_col)


def R_component(p: Sequence[int], k: int, j: int) -> tuple[int, Partition]:
    """The tower row-``k`` component carrying the removal done by ``f(j, p)``.

    Returns ``(s, component)`` with ``s`` 1-based.  The component is the
    one whose size contains the binary digit ``2**(a_t - k)``, where ``a_t``
    is the least exponent of ``|p|`` that is at least ``j``.
    """
    p = _as_odd(p)
    if not 0 <= k <= j:
        raise ValueError("need 0 <= k <= j")
    _check_k(p, j)
    a_t = min(a for a in binary_exponents(p.size) if a >= j)
    bit = 1 << (a_t - k)
    row = k_data(p, k).last_row
    hits = [s for s, x in enumerate(row, 1) if x.size & bit]
    if len(hits) != 1:
        raise AssertionError(f"digit 2^{a_t - k} found in {len(hits)} components")
    return hits[0], row[hits[0] - 1]


def in_G(p: Sequence[int], k: int) -> bool:
    """Whether ``f_k f_k (p) == f_{k+1}(p)``."""
    p = _as_odd(p)
    _check_k(p, k + 1)
    return f(k, f(k, p)) == f(k + 1, p)


def in_T(p: Sequence[int], k: int, l: int) -> bool:
    """Whether ``f_k f_l (p) == f_l f_k (p)``."""
    p = _as_odd(p)
    if not 0 <= k < l or (1 << k) + (1 << l) > p.size:
        raise ValueError(f"need 0 <= k < l and 2^k + 2^l <= {p.size}")
    return f(k, f(l, p)) == f(l, f(k, p))


def classify_omega_type(p: Sequence[int], l: int) -> str:
    """``"1+"`` if the odd 1-hook and odd 2^l-hook share their hand row,
    ``"1-"`` if they share their foot column, ``"2"`` otherwise."""
    p = _as_odd(p)
    if l < 1:
        raise ValueError("l must be >= 1")
    _check_k(p, l)
    _, h0 = _f(0, p)
    _, hl = _f(l, p)
    if h0.row == hl.row:
        return "1+"
    if h0.col == hl.col:
        return "1-"
    return "2"


def extensions_with_runner(g: Sequence[int], t: int) -> list[tuple[int, Partition, AbacusConfig]]:
    """All ways to adjoin a ``2**t``-hook to the odd partition ``g``.

    For each runner ``x`` of the normalized ``2**t``-abacus ``B`` of ``g``
    the lowest bead on ``x`` is slid one row down, giving the abacus ``A``
    with ``A`` pushed up equal to ``B``.  Returns ``(x, partition, A)``.
    """
    g = _as_odd(g)
    e = 1 << t
    if g.size >= e:
        raise ValueError(f"|g| = {g.size} must be below 2^{t}")
    base = normalized_abacus(g, e)
    out = []
    for x in range(e):
        lowest = max(b for b in base.beads if b % e == x)
        a = base.slide_down(lowest)
        out.append((x, a.partition(), a))
    return out


def extensions(g: Sequence[int], t: int) -> list[Partition]:
    """E(g, 2^t) in runner order; ``2**t`` odd partitions with ``2**t``-core ``g``."""
    return [lam for _, lam, _ in extensions_with_runner(g, t)]
