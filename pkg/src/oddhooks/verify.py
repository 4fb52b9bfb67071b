"""Brute-force certification of the closed formulas and structural lemmas.

Every claim is a registered generator; it yields ``(params, expected,
actual)`` triples that become :class:`ClaimResult` records.  Count claims
pair a closed form (``expected``) with an exhaustive count (``actual``).
Biconditional claims yield, per parameter set, the number of cases checked
as ``expected`` and the number where both sides agree as ``actual``; the
first disagreement, if any, is stored under ``params["counterexample"]``.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .abacus import abacus_for, core, default_row_bound, normalized_abacus
from .characters import (
    degree,
    factorized_magnitude,
    mn_value,
    omega,
    omega_variant,
    rho_gamma,
    theorem_A_check,
    unit_value_criterion,
)
from .counting import (
    DigitProfile,
    F0l,
    Fkl,
    G0,
    Gk,
    T0l,
    Tkl,
    omega_counts,
    F_reduction,
    unit_value_count,
)
from .operators import (
    R_component,
    classify_omega_type,
    extensions_with_runner,
    f,
    f_abacus,
    in_G,
    in_T,
    odd_bead,
    odd_hook_data,
    odd_hooks,
    two_chain,
)
from .partition import Partition, conjugate, hook_partition, partitions
from .tower import (
    binary_exponents,
    enumerate_odd,
    enumerate_odd_filtered,
    is_odd,
    k_data,
    k_type,
    odd_count,
)

__all__ = [
    "REPORT_VERSION",
    "Bounds",
    "ClaimResult",
    "VerificationReport",
    "SUITES",
    "REGISTRY",
    "brute_G",
    "brute_F",
    "brute_T",
    "brute_omega",
    "verify_all",
    "verify_structure_lemmas",
    "run_claims",
    "workers_from_env",
    "clear_caches",
    "claim_ids",
]

REPORT_VERSION = 1
SUITES = ("counts", "lemmas", "characters")
WORKERS_ENV = "ODDHOOKS_WORKERS"


@dataclass(frozen=True)
class Bounds:
    enumeration: int = 48  # formula-vs-oracle counts
    characters: int = 36  # character-value claims
    parity: int = 24  # claims over all (not only odd) partitions
    lemmas: int = 40  # structural and reduction lemmas

    def capped(self, max_n: int) -> "Bounds":
        return Bounds(*(min(v, max_n) for v in asdict(self).values()))


@dataclass
class ClaimResult:
    id: str
    params: dict
    expected: object
    actual: object
    passed: bool
    ms: float = 0.0

    def sort_key(self):
        return self.id, json.dumps(self.params, sort_keys=True)


@dataclass
class VerificationReport:
    bounds: dict
    claims: list[ClaimResult] = field(default_factory=list)
    version: int = REPORT_VERSION

    @property
    def summary(self) -> dict:
        ok = sum(c.passed for c in self.claims)
        return {"pass": ok, "fail": len(self.claims) - ok}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> list[ClaimResult]:
        return [c for c in self.claims if not c.passed]

    def by_id(self) -> dict[str, list[ClaimResult]]:
        out = defaultdict(list)
        for c in self.claims:
            out[c.id].append(c)
        return dict(out)

    def to_dict(self, timings: bool = True) -> dict:
        claims = []
        for c in self.claims:
            d = {"id": c.id, "params": c.params, "expected": c.expected, "actual": c.actual, "pass": c.passed}
            if timings:
                d["ms"] = round(c.ms, 3)
            claims.append(d)
        return {"version": self.version, "bounds": self.bounds, "claims": claims, "summary": self.summary}

    def to_json(self, timings: bool = True, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(timings), indent=indent, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        claims = [
            ClaimResult(c["id"], c["params"], c["expected"], c["actual"], c["pass"], c.get("ms", 0.0))
            for c in d["claims"]
        ]
        return cls(bounds=d["bounds"], claims=claims, version=d["version"])

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "params", "expected", "actual", "pass", "ms"])
        for c in self.claims:
            w.writerow([c.id, json.dumps(c.params, sort_keys=True), json.dumps(c.expected),
                        json.dumps(c.actual), c.passed, round(c.ms, 3)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for cid, rows in self.by_id().items():
            bad = [r for r in rows if not r.passed]
            lines.append(f"{'PASS' if not bad else 'FAIL'} {cid} ({len(rows) - len(bad)}/{len(rows)})")
            for r in bad[:5]:
                lines.append(f"    {json.dumps(r.params, sort_keys=True)}: expected {r.expected}, got {r.actual}")
        s = self.summary
        lines.append(f"{s['pass']} passed, {s['fail']} failed")
        return "\n".join(lines)


# ----------------------------------------------------------------------------
# brute-force counts


def brute_G(n: int, k: int) -> int:
    return sum(in_G(p, k) for p in enumerate_odd(n))


def brute_F(n: int, k: int, l: int) -> int:
    return sum(not in_T(p, k, l) for p in enumerate_odd(n))


def brute_T(n: int, k: int, l: int) -> int:
    return sum(in_T(p, k, l) for p in enumerate_odd(n))


def brute_omega(n: int, l: int) -> tuple[int, int, int]:
    """Counts of commuting partitions for ``f_0, f_l`` by type ``(1+, 1-, 2)``."""
    counts = {"1+": 0, "1-": 0, "2": 0}
    everything = n < 1 + (1 << l)  # f_0 f_l undefined: all count as commuting
    for p in enumerate_odd(n):
        if everything or in_T(p, 0, l):
            counts[classify_omega_type(p, l)] += 1
    return counts["1+"], counts["1-"], counts["2"]


# ----------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class ClaimFamily:
    id: str
    suite: str
    func: Callable[[Bounds], Iterable[tuple]]


REGISTRY: dict[str, ClaimFamily] = {}


def claim(cid: str, suite: str):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite}")

    def deco(func):
        REGISTRY[cid] = ClaimFamily(cid, suite, func)
        return func

    return deco


class _Tally:
    """Collect a biconditional check over many cases."""

    def __init__(self):
        self.cases = 0
        self.agree = 0
        self.counterexample = None

    def check(self, ok: bool, witness):
        self.cases += 1
        if ok:
            self.agree += 1
        elif self.counterexample is None:
            self.counterexample = witness

    def emit(self, params: dict):
        if self.counterexample is not None:
            params = dict(params, counterexample=_plain(self.counterexample))
        return params, self.cases, self.agree


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _kl_pairs(n: int) -> Iterator[tuple[int, int]]:
    for l in range(1, n.bit_length()):
        for k in range(l):
            if (1 << k) + (1 << l) <= n:
                yield k, l


def _ks_for_G(n: int) -> range:
    return range(0, max(n.bit_length() - 1, 0))


# ----------------------------------------------------------------------------
# counts suite

_GOLDEN = [
    ("G0", {"n": 2}, 2), ("G0", {"n": 3}, 2), ("G0", {"n": 6}, 4),
    *[("G0", {"n": 1 << t}, 1 << (t - 1)) for t in range(2, 7)],
    *[("G0", {"n": (1 << t) + 1}, 4) for t in range(2, 6)],
    ("Gk", {"n": 24, "k": 2}, 112),
    ("Fkl", {"n": 6, "k": 0, "l": 1}, 0), ("Fkl", {"n": 9, "k": 0, "l": 1}, 6),
    ("Fkl", {"n": 24, "k": 2, "l": 3}, 96), ("Fkl", {"n": 36, "k": 2, "l": 3}, 24),
    *[("T0l", {"n": (1 << t) + (1 << l), "l": l}, 1 << (l + 2))
      for l, t in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]],
]


def _golden_formula(name, ps):
    return {"G0": lambda: G0(ps["n"]), "Gk": lambda: Gk(ps["n"], ps["k"]),
            "Fkl": lambda: Fkl(ps["n"], ps["k"], ps["l"]), "T0l": lambda: T0l(ps["n"], ps["l"])}[name]()


def _golden_oracle(name, ps):
    return {"G0": lambda: brute_G(ps["n"], 0), "Gk": lambda: brute_G(ps["n"], ps["k"]),
            "Fkl": lambda: brute_F(ps["n"], ps["k"], ps["l"]),
            "T0l": lambda: brute_T(ps["n"], 0, ps["l"])}[name]()


@claim("golden.formula", "counts")
def _c_golden_formula(b: Bounds):
    for name, ps, value in _GOLDEN:
        yield dict(ps, formula=name), value, _golden_formula(name, ps)


@claim("golden.oracle", "counts")
def _c_golden_oracle(b: Bounds):
    for name, ps, value in _GOLDEN:
        yield dict(ps, formula=name), value, _golden_oracle(name, ps)


@claim("counts.odd_total", "counts")
def _c_odd_total(b: Bounds):
    for n in range(b.enumeration + 1):
        yield {"n": n}, odd_count(n), len(enumerate_odd(n))


@claim("counts.odd_set_filter", "counts")
def _c_odd_set(b: Bounds):
    for n in range(min(b.parity, 24) + 1):
        yield {"n": n}, True, enumerate_odd(n) == enumerate_odd_filtered(n)


@claim("counts.G", "counts")
def _c_G(b: Bounds):
    for n in range(2, b.enumeration + 1):
        for k in _ks_for_G(n):
            yield {"n": n, "k": k}, Gk(n, k), brute_G(n, k)


@claim("counts.F", "counts")
def _c_F(b: Bounds):
    for n in range(3, b.enumeration + 1):
        for k, l in _kl_pairs(n):
            yield {"n": n, "k": k, "l": l}, Fkl(n, k, l), brute_F(n, k, l)


@claim("counts.T", "counts")
def _c_T(b: Bounds):
    for n in range(3, b.enumeration + 1):
        for k, l in _kl_pairs(n):
            yield {"n": n, "k": k, "l": l}, Tkl(n, k, l), brute_T(n, k, l)


@claim("counts.T0l", "counts")
def _c_T0l(b: Bounds):
    for n in range(3, b.enumeration + 1):
        for l in range(1, n.bit_length()):
            if 1 + (1 << l) <= n:
                ps = {"n": n, "l": l}
                yield dict(ps, via="oracle"), T0l(n, l), brute_T(n, 0, l)
                yield dict(ps, via="Tkl"), T0l(n, l), Tkl(n, 0, l)
                yield dict(ps, via="omega_oracle"), T0l(n, l), sum(brute_omega(n, l))


@claim("counts.omega", "counts")
def _c_omega(b: Bounds):
    for n in range(2, b.enumeration + 1):
        for l in range(1, n.bit_length()):
            yield {"n": n, "l": l}, list(omega_counts(n, l)), list(brute_omega(n, l))


@claim("counts.F_reduction_k0", "counts")
def _c_F_reduction_k0(b: Bounds):
    # the reduction formula at k = 0 against the base-case count
    for n in range(7, b.enumeration + 1):
        t = n.bit_length() - 1
        if n == 1 << t:
            continue
        for l in range(1, t):
            yield {"n": n, "l": l}, F0l(n, l), F_reduction(n, 0, l)


@claim("counts.all_commute", "counts")
def _c_all_commute(b: Bounds):
    # T_{k,l}(n) = O(n) exactly in the degenerate cases
    for n in range(3, b.enumeration + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        for k, l in _kl_pairs(n):
            predicted = m < (1 << k) or l == t or (n == 6 and (k, l) == (0, 1))
            yield {"n": n, "k": k, "l": l}, predicted, brute_F(n, k, l) == 0


@claim("counts.G_core_factor", "counts")
def _c_G_core_factor(b: Bounds):
    for n in range(2, b.enumeration + 1):
        for k in _ks_for_G(n):
            prof = DigitProfile.for_G(n, k)
            if prof.nbar >= 2 << k:
                yield {"n": n, "k": k}, prof.core_factor * brute_G(prof.nbar, k), brute_G(n, k)


@claim("counts.F_core_factor", "counts")
def _c_F_core_factor(b: Bounds):
    for n in range(3, b.enumeration + 1):
        for k, l in _kl_pairs(n):
            prof = DigitProfile.for_F(n, k, l)
            if prof.nbar >= (1 << k) + (1 << l):
                yield {"n": n, "k": k, "l": l}, prof.core_factor * brute_F(prof.nbar, k, l), brute_F(n, k, l)


@claim("counts.G0_extremes", "counts")
def _c_G0_extremes(b: Bounds):
    for n in range(2, b.enumeration + 1):
        members = [p for p in enumerate_odd(n) if in_G(p, 0)]
        yield {"n": n, "set": "all"}, n in (2, 3, 5), len(members) == odd_count(n)
        trivial = {Partition([n]), Partition([1] * n)}
        yield {"n": n, "set": "trivial"}, n in (2, 3, 4), set(members) == trivial


@claim("counts.Gk_all", "counts")
def _c_Gk_all(b: Bounds):
    for n in range(4, b.enumeration + 1):
        for k in range(1, n.bit_length() - 1):
            yield {"n": n, "k": k}, n >> k == 2, brute_G(n, k) == odd_count(n)


@claim("counts.basecases", "counts")
def _c_basecases(b: Bounds):
    for t in range(2, b.enumeration.bit_length()):
        n = 1 << t
        tally = _Tally()
        for u in range(n):
            lam = hook_partition(n, u)
            tally.check(in_G(lam, 0) == (u % 4 in (0, 3)), {"u": u})
        yield tally.emit({"n": n, "case": "hooks"})
        if n + 1 <= b.enumeration:
            good = {Partition([n + 1]), Partition([n - 1, 2])}
            good |= {conjugate(p) for p in good}
            tally = _Tally()
            for lam in enumerate_odd(n + 1):
                tally.check(in_G(lam, 0) == (lam in good), list(lam))
            yield tally.emit({"n": n + 1, "case": "plus_one"})


@claim("counts.unit_values", "characters")
def _c_unit_values(b: Bounds):
    for n in range(1, min(b.parity, b.characters) + 1):
        for k in range(n.bit_length()):
            g = rho_gamma(n, k)
            found = sum(abs(mn_value(p, g)) == 1 for p in enumerate_odd(n))
            yield {"n": n, "k": k}, unit_value_count(n, k), found


# ----------------------------------------------------------------------------
# characters suite


@claim("char.oddness", "characters")
def _c_oddness(b: Bounds):
    # at most 18 by default: every partition, four independent routes
    for n in range(min(b.parity, 18) + 1):
        tally = _Tally()
        w = omega(n)
        for p in partitions(n):
            routes = (is_odd(p), degree(p) % 2 == 1, two_chain(p) is not None, abs(mn_value(p, w, None)) == 1)
            tally.check(len(set(routes)) == 1, {"p": list(p), "routes": list(routes)})
        yield tally.emit({"n": n})


@claim("char.degree_mn", "characters")
def _c_degree_mn(b: Bounds):
    for n in range(min(b.parity, 14) + 1):
        tally = _Tally()
        for p in partitions(n):
            tally.check(mn_value(p, [1] * n) == degree(p), list(p))
        yield tally.emit({"n": n})


def _two_element_classes(n: int, cap: int | None = None) -> Iterator[list[int]]:
    cap = cap or n
    if n == 0:
        yield []
        return
    c = 1 << (min(n, cap).bit_length() - 1)
    while c >= 1:
        for rest in _two_element_classes(n - c, c):
            yield [c] + rest
        c >>= 1


@claim("char.parity_transfer", "characters")
def _c_parity(b: Bounds):
    for n in range(min(b.parity, 12) + 1):
        tally = _Tally()
        for p in partitions(n):
            d = degree(p) % 2
            for c in _two_element_classes(n):
                tally.check(mn_value(p, c) % 2 == d, {"p": list(p), "class": c})
        yield tally.emit({"n": n})


@claim("char.factorization", "characters")
def _c_factorization(b: Bounds):
    for n in range(1, min(b.characters, 20) + 1):
        for k in range(n.bit_length()):
            tally = _Tally()
            g = rho_gamma(n, k)
            for p in enumerate_odd(n):
                tally.check(abs(mn_value(p, g)) == factorized_magnitude(p, k), list(p))
            yield tally.emit({"n": n, "k": k, "set": "odd"})
    for n in range(1, min(b.parity, 12) + 1):
        for k in range(1, n.bit_length()):
            tally = _Tally()
            g = rho_gamma(n, k)
            for p in partitions(n):
                tally.check(abs(mn_value(p, g)) == factorized_magnitude(p, k), list(p))
            yield tally.emit({"n": n, "k": k, "set": "all"})


@claim("char.value1", "characters")
def _c_value1(b: Bounds):
    for n in range(1, min(b.parity, b.characters) + 1):
        for k in range(n.bit_length()):
            tally = _Tally()
            g = rho_gamma(n, k)
            for p in enumerate_odd(n):
                tally.check(unit_value_criterion(p, k) == (abs(mn_value(p, g)) == 1), list(p))
            yield tally.emit({"n": n, "k": k})


@claim("char.good_iff_unit_value", "characters")
def _c_good_iff_unit_value(b: Bounds):
    for n in range(2, b.characters + 1):
        for k in range(n.bit_length()):
            if (2 << k) > n or n >> k > 4:
                continue
            tally = _Tally()
            for p in enumerate_odd(n):
                lhs, rhs = theorem_A_check(p, k)
                tally.check(lhs == rhs, {"p": list(p), "in_G": lhs, "unit": rhs})
            yield tally.emit({"n": n, "k": k})


@claim("char.Gk_small", "characters")
def _c_Gk_small(b: Bounds):
    for n in range(2, b.enumeration + 1):
        for k in range(n.bit_length()):
            if (2 << k) > n or n >> k > 4:
                continue
            tally = _Tally()
            for p in enumerate_odd(n):
                tally.check(in_G(p, k) == unit_value_criterion(p, k), list(p))
            yield tally.emit({"n": n, "k": k})


@claim("char.good_implies_unit_on_split_class", "characters")
def _c_good_implies_unit(b: Bounds):
    for n in range(2, min(b.parity, b.characters) + 1):
        for i, a in enumerate(binary_exponents(n), 1):
            if a == 0:
                continue
            k = a - 1
            cls = omega_variant(n, i, k)
            tally = _Tally()
            for p in enumerate_odd(n):
                if in_G(p, k):
                    tally.check(abs(mn_value(p, cls)) == 1, list(p))
            yield tally.emit({"n": n, "i": i, "k": k})


@claim("char.counterexample", "characters")
def _c_counterexample(b: Bounds):
    lam = Partition([10, 1, 1])
    yield {"p": [10, 1, 1], "what": "class"}, [8, 2, 2], list(omega_variant(12, 2, 1))
    yield {"p": [10, 1, 1], "what": "|chi|"}, 1, abs(mn_value(lam, omega_variant(12, 2, 1)))
    yield {"p": [10, 1, 1], "what": "in_G k=1"}, False, in_G(lam, 1)
    yield {"p": [10, 1, 1], "what": "f1f1"}, [8], list(f(1, f(1, lam)))
    yield {"p": [10, 1, 1], "what": "f2"}, [6, 1, 1], list(f(2, lam))


# ----------------------------------------------------------------------------
# lemma suite: operators and structure


@claim("operator.unique_odd_hook", "lemmas")
def _c_unique(b: Bounds):
    for n in range(1, min(b.lemmas, 32) + 1):
        tally = _Tally()
        for p in enumerate_odd(n):
            for k in range(n.bit_length()):
                tally.check(len(odd_hooks(p, 1 << k)) == 1, {"p": list(p), "k": k})
        yield tally.emit({"n": n})


@claim("operator.f_abacus", "lemmas")
def _c_f_abacus(b: Bounds):
    for n in range(1, b.lemmas + 1):
        tally = _Tally()
        for p in enumerate_odd(n):
            for k in range(n.bit_length()):
                tally.check(f_abacus(k, p) == f(k, p), {"p": list(p), "k": k})
        yield tally.emit({"n": n})


@claim("operator.odd_hook_notation", "lemmas")
def _c_odd_hook_notation(b: Bounds):
    # r_k read off the normalized abacus equals the first-column hook length
    for n in range(1, b.lemmas + 1):
        tally = _Tally()
        for p in enumerate_odd(n):
            config = normalized_abacus(p, n + 1)
            for k in range(n.bit_length()):
                row, col = config.coords(odd_bead(config, k))
                tally.check(row == 0 and col == odd_hook_data(p, k).first_column_hook, {"p": list(p), "k": k})
        yield tally.emit({"n": n})


@claim("operator.conjugation", "lemmas")
def _c_conjugation(b: Bounds):
    flip = {"1+": "1-", "1-": "1+", "2": "2"}
    for n in range(2, b.lemmas + 1):
        tally = _Tally()
        for p in enumerate_odd(n):
            q = conjugate(p)
            for k in _ks_for_G(n):
                tally.check(in_G(p, k) == in_G(q, k), {"p": list(p), "k": k})
            for l in range(1, n.bit_length()):
                tally.check(classify_omega_type(q, l) == flip[classify_omega_type(p, l)], {"p": list(p), "l": l})
        yield tally.emit({"n": n})


@claim("operator.R_arithmetic", "lemmas")
def _c_R_arithmetic(b: Bounds):
    # the k-data of f_j(p) replaces R_k^j(p) by f_{j-k}(R_k^j(p))
    for n in range(2, b.lemmas + 1):
        tally = _Tally()
        for p in enumerate_odd(n):
            for j in range(n.bit_length()):
                fj = f(j, p)
                for k in range(j + 1):
                    s, comp = R_component(p, k, j)
                    before, after = k_data(p, k), k_data(fj, k)
                    expect = list(before.last_row)
                    expect[s - 1] = f(j - k, comp)
                    ok = after.core_rows == before.core_rows and list(after.last_row) == expect
                    tally.check(ok, {"p": list(p), "j": j, "k": k})
        yield tally.emit({"n": n})


@claim("abacus.left_slides_in_row", "lemmas")
def _c_left_slides(b: Bounds):
    # on the 2^t-abaci of a core and of its extensions, every odd 2^k-slide
    # with 2^k <= m stays inside its row
    for n in range(3, b.lemmas + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        tally = _Tally()
        for g in enumerate_odd(m):
            configs = [normalized_abacus(g, 1 << t)] + [a for _, _, a in extensions_with_runner(g, t)]
            for config in configs:
                for k in range(m.bit_length()):
                    _, col = config.coords(odd_bead(config, k))
                    tally.check(col >= 1 << k, {"g": list(g), "p": list(config.partition()), "k": k})
        yield tally.emit({"n": n})


@claim("lemma.f_commutes_with_core", "lemmas")
def _c_f_core(b: Bounds):
    for n in range(3, b.lemmas + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        tally = _Tally()
        for l in range(m.bit_length()):
            for p in enumerate_odd(n):
                tally.check(f(l, core(p, 1 << t)) == core(f(l, p), 1 << t), {"p": list(p), "l": l})
        yield tally.emit({"n": n})


@claim("lemma.G0_core", "lemmas")
def _c_G0_core(b: Bounds):
    for n in range(4, b.lemmas + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        if m < 2:
            continue
        tally = _Tally()
        for p in enumerate_odd(n):
            if in_G(p, 0):
                tally.check(in_G(core(p, 1 << t), 0), list(p))
        yield tally.emit({"n": n})


def _r(config, k: int) -> int:
    row, col = config.coords(odd_bead(config, k))
    if row != 0:
        raise AssertionError("odd bead outside row 0")
    return col


@claim("lemma.good_core_runners", "lemmas")
def _c_good_core_runners(b: Bounds):
    t = 2
    while (1 << t) <= b.lemmas:
        for m in range(2, 1 << t):
            tally = _Tally()
            for g in enumerate_odd(m):
                B = normalized_abacus(g, 1 << t)
                r0, r1 = _r(B, 0), _r(B, 1)
                tally.check(in_G(g, 0) == (r0 == r1 or r0 == r1 - 1), {"g": list(g), "r0": r0, "r1": r1})
            yield tally.emit({"m": m, "t": t})
        t += 1


@claim("lemma.good_extension_runners", "lemmas")
def _c_good_extension_runners(b: Bounds):
    for n in range(4, b.lemmas + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        if m < 2:
            continue
        tally = _Tally()
        for g in enumerate_odd(m):
            if not in_G(g, 0):
                continue
            B = normalized_abacus(g, 1 << t)
            r0, r1 = _r(B, 0), _r(B, 1)
            bad = {r0 - 2, r0 - 1} if r0 == r1 else {r0, r0 + 1}
            for x, lam, _ in extensions_with_runner(g, t):
                tally.check(in_G(lam, 0) == (x not in bad), {"g": list(g), "x": x})
        yield tally.emit({"n": n})


def _omega_windows(bound: int):
    # n = 2^t + m with 2^l + 1 <= m < 2^t
    for n in range(3, bound + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        for l in range(1, t):
            if (1 << l) + 1 <= m:
                yield n, t, m, l


@claim("lemma.core_omega", "lemmas")
def _c_core_omega(b: Bounds):
    for n, t, m, l in _omega_windows(b.lemmas):
        tally = _Tally()
        for p in enumerate_odd(n):
            if in_T(p, 0, l):
                tally.check(in_T(core(p, 1 << t), 0, l), list(p))
        yield tally.emit({"n": n, "l": l})


def _extension_lemma(n, t, m, l, wanted):
    tally = _Tally()
    for g in enumerate_odd(m):
        if not in_T(g, 0, l) or classify_omega_type(g, l) != wanted:
            continue
        B = normalized_abacus(g, 1 << t)
        r0, rl = _r(B, 0), _r(B, l)
        excluded = {
            "2": set(),
            "1+": {r0 - 1, rl - (1 << l), rl - (1 << l) - 1},
            "1-": {r0, rl, rl + 1},
        }[wanted]
        for x, lam, _ in extensions_with_runner(g, t):
            member = in_T(lam, 0, l)
            ok = member == (x not in excluded) and (not member or classify_omega_type(lam, l) == wanted)
            tally.check(ok, {"g": list(g), "x": x})
    return tally.emit({"n": n, "l": l})


@claim("lemma.type2_extension", "lemmas")
def _c_type2(b: Bounds):
    for w in _omega_windows(b.lemmas):
        yield _extension_lemma(*w, "2")


@claim("lemma.type1plus", "lemmas")
def _c_type1plus(b: Bounds):
    for w in _omega_windows(b.lemmas):
        yield _extension_lemma(*w, "1+")


@claim("lemma.type1minus", "lemmas")
def _c_type1minus(b: Bounds):
    for w in _omega_windows(b.lemmas):
        yield _extension_lemma(*w, "1-")


@claim("lemma.iteration_counting", "lemmas")
def _c_iteration(b: Bounds):
    for n, t, m, l in _omega_windows(b.enumeration):
        big, small = brute_omega(n, l), brute_omega(m, l)
        f_ = (1 << t) - 3
        yield {"n": n, "l": l}, [f_ * small[0], f_ * small[1], small[2] << t], list(big)


@claim("lemma.hook_types", "lemmas")
def _c_hook_types(b: Bounds):
    t = 1
    while (1 << t) <= b.lemmas:
        n = 1 << t
        for l in range(1, t + 1):
            tally = _Tally()
            for w in range(n):
                lam = hook_partition(n, w)
                if l < t:
                    has1, hasl = w & 1, w >> l & 1
                    want = "1+" if not has1 and not hasl else "1-" if has1 and hasl else "2"
                else:
                    want = "1+" if w % 2 == 0 else "1-"
                tally.check(in_T(lam, 0, l) if l < t else True, {"w": w, "member": False})
                tally.check(classify_omega_type(lam, l) == want, {"w": w})
            yield tally.emit({"n": n, "l": l})
        t += 1


def _runner_windows(bound: int):
    # n = 2^t + m with t >= l and 1 <= m < 2^l
    for n in range(3, bound + 1):
        t = n.bit_length() - 1
        m = n - (1 << t)
        for l in range(1, t + 1):
            if 1 <= m < (1 << l):
                yield n, t, m, l


@lru_cache(maxsize=None)
def _runner_data(lam: Partition, t: int, l: int):
    e = 1 << l
    g = core(lam, 1 << t)
    a = default_row_bound(lam.size, e)
    B = normalized_abacus(g, e, row_bound=a)
    A = abacus_for(lam, e, B.bead_count, row_bound=a)
    if A.push_up()[0] != B:
        raise AssertionError(f"2^{l}-abacus of {lam} does not push up to that of its core")
    nonempty = [j for j, mu in enumerate(A.runner_partitions()) if mu]
    if len(nonempty) != 1:
        raise AssertionError(f"{lam}: {len(nonempty)} nonempty runners")
    x = nonempty[0]
    mu = A.runner_partition(x)
    u = 1 << (t - l)
    if mu.size != u or not mu.is_hook():
        raise AssertionError(f"{lam}: runner partition {mu} is not a hook of {u}")
    return _r(B, 0), x, mu, u


@claim("lemma.runner_x_not_b0", "lemmas")
def _c_runner_not_b0(b: Bounds):
    for n, t, m, l in _runner_windows(b.lemmas):
        tally = _Tally()
        for lam in enumerate_odd(n):
            b0, x, mu, u = _runner_data(lam, t, l)
            if x not in (b0 - 1, b0):
                tally.check(in_T(lam, 0, l) and classify_omega_type(lam, l) == "2", list(lam))
        yield tally.emit({"n": n, "l": l})


@claim("lemma.runner_b0", "lemmas")
def _c_runner_b0(b: Bounds):
    for n, t, m, l in _runner_windows(b.lemmas):
        tally = _Tally()
        for lam in enumerate_odd(n):
            b0, x, mu, u = _runner_data(lam, t, l)
            if x == b0:
                member = in_T(lam, 0, l)
                ok = member == (mu == (u,)) and (not member or classify_omega_type(lam, l) == "1+")
                tally.check(ok, list(lam))
        yield tally.emit({"n": n, "l": l})


@claim("lemma.runner_b0_minus_1", "lemmas")
def _c_runner_b0m1(b: Bounds):
    for n, t, m, l in _runner_windows(b.lemmas):
        tally = _Tally()
        for lam in enumerate_odd(n):
            b0, x, mu, u = _runner_data(lam, t, l)
            if x == b0 - 1:
                member = in_T(lam, 0, l)
                ok = member == (mu == (1,) * u) and (not member or classify_omega_type(lam, l) == "1-")
                tally.check(ok, list(lam))
        yield tally.emit({"n": n, "l": l})


def _m_2l_types(t: int, l: int, w: int) -> dict[int, str]:
    """Runner -> type of the commuting extensions of ``(2^l - w, 1^w)``.

    Odd ``w``: runners ``0, 2^l + 1`` give 1- and ``1, 2^l`` give 2.  Even
    ``w`` is the conjugate picture: ``2^l, 2^t - 1`` give 1+ and
    ``0, 2^l - 1`` give 2.
    """
    if w % 2:
        return {0: "1-", (1 << l) + 1: "1-", 1: "2", 1 << l: "2"}
    return {1 << l: "1+", (1 << t) - 1: "1+", 0: "2", (1 << l) - 1: "2"}


def _m_2l_cases(bound: int):
    for t in range(2, bound.bit_length()):
        for l in range(1, t):
            n = (1 << t) + (1 << l)
            if n <= bound:
                yield n, t, l


@claim("lemma.m_is_2_to_l", "lemmas")
def _c_m_2l(b: Bounds):
    for n, t, l in _m_2l_cases(b.lemmas):
        tally = _Tally()
        mod = 1 << t
        for w in range(1 << l):
            g = hook_partition(1 << l, w)
            s = 1 if w % 2 else -1  # (-1)^(w-1)
            good = {0, s % mod, 1 << l, ((1 << l) + s) % mod}
            for x, lam, _ in extensions_with_runner(g, t):
                tally.check(in_T(lam, 0, l) == (x in good), {"w": w, "x": x})
        yield tally.emit({"n": n, "l": l})


@claim("lemma.m_is_2_to_l_types", "lemmas")
def _c_m_2l_types(b: Bounds):
    for n, t, l in _m_2l_cases(b.lemmas):
        tally = _Tally()
        for w in range(1 << l):
            types = _m_2l_types(t, l, w)
            for x, lam, _ in extensions_with_runner(hook_partition(1 << l, w), t):
                if x in types:
                    tally.check(classify_omega_type(lam, l) == types[x], {"w": w, "x": x})
        yield tally.emit({"n": n, "l": l})


# ----------------------------------------------------------------------------
# lemma suite: reduction laws


def _by_type(n: int, k: int) -> dict[tuple[int, ...], list[Partition]]:
    groups = defaultdict(list)
    for p in enumerate_odd(n):
        groups[k_type(p, k).parts].append(p)
    return dict(groups)


def _digit_slots(tau, *exps):
    """Index (0-based) of the part of ``tau`` containing each ``2**e``."""
    return [next(i for i, x in enumerate(tau) if x >> e & 1) for e in exps]


@claim("reduction.fk2_fk1", "lemmas")
def _c_fk2(b: Bounds):
    for n in range(2, b.lemmas + 1):
        for k in _ks_for_G(n):
            tally = _Tally()
            for p in enumerate_odd(n):
                sk, rk = R_component(p, k, k)
                sk1, rk1 = R_component(p, k, k + 1)
                rhs = sk == sk1 and in_G(rk, 0)
                tally.check(in_G(p, k) == rhs, list(p))
            yield tally.emit({"n": n, "k": k})


@claim("reduction.cor_fk2_fk1", "lemmas")
def _c_cor_fk2(b: Bounds):
    for n in range(2, b.lemmas + 1):
        for k in _ks_for_G(n):
            prof = DigitProfile.for_G(n, k)
            bp, bq = prof.b[prof.p - 1], prof.b[prof.q - 1]
            tally = _Tally()
            for p in enumerate_odd(n):
                row = k_data(p, k).last_row
                rhs = any(x.size >> bp & 1 and x.size >> bq & 1 and in_G(x, 0) for x in row)
                tally.check(in_G(p, k) == rhs, list(p))
            yield tally.emit({"n": n, "k": k})


@claim("reduction.reduced_ff_count", "lemmas")
def _c_reduced_ff(b: Bounds):
    for n in range(2, b.lemmas + 1):
        for k in _ks_for_G(n):
            prof = DigitProfile.for_G(n, k)
            bp, bq = prof.b[prof.p - 1], prof.b[prof.q - 1]
            tally = _Tally()
            for tau, members in _by_type(n, k).items():
                jp, jq = _digit_slots(tau, bp, bq)
                for p in members:
                    if jp != jq:
                        predicted = False
                    else:
                        predicted = in_G(k_data(p, k).last_row[jp], 0)
                    tally.check(in_G(p, k) == predicted, {"p": list(p), "type": list(tau)})
            yield tally.emit({"n": n, "k": k})


@claim("reduction.ff_core_part", "lemmas")
def _c_ff_core(b: Bounds):
    for n in range(2, b.lemmas + 1):
        for k in _ks_for_G(n):
            prof = DigitProfile.for_G(n, k)
            if prof.nbar == n or prof.nbar < 2 << k:
                continue
            big, small = _by_type(n, k), _by_type(prof.nbar, k)
            for tau in sorted(big):
                got = sum(in_G(p, k) for p in big[tau])
                want = prof.core_factor * sum(in_G(p, k) for p in small.get(tau, []))
                yield {"n": n, "k": k, "type": list(tau)}, want, got


@claim("reduction.k_ell_0_ell", "lemmas")
def _c_kl0l(b: Bounds):
    for n in range(3, b.lemmas + 1):
        for k, l in _kl_pairs(n):
            tally = _Tally()
            for p in enumerate_odd(n):
                if R_component(p, k, k)[0] != R_component(p, k, l)[0]:
                    tally.check(in_T(p, k, l), list(p))
            yield tally.emit({"n": n, "k": k, "l": l})


def _in_T0(x: Partition, l: int) -> bool:
    return x.size >= 1 + (1 << l) and in_T(x, 0, l)


@claim("reduction.k_ell_0_ell_2", "lemmas")
def _c_kl0l2(b: Bounds):
    for n in range(3, b.lemmas + 1):
        for k, l in _kl_pairs(n):
            tally = _Tally()
            for p in enumerate_odd(n):
                s, comp = R_component(p, k, k)
                if s != R_component(p, k, l)[0]:
                    continue
                fl = f(l, p)
                same = comp.size >= 1 << (l - k) and R_component(fl, k, k) == (s, f(l - k, comp))
                rhs = same and _in_T0(comp, l - k)
                tally.check(in_T(p, k, l) == rhs, list(p))
            yield tally.emit({"n": n, "k": k, "l": l})


def _section5_window(n: int, k: int, l: int) -> bool:
    t = n.bit_length() - 1
    return n > 6 and k < l < t and (1 << k) <= n - (1 << t)


@claim("reduction.reducedcount", "lemmas")
def _c_reducedcount(b: Bounds):
    for n in range(7, b.lemmas + 1):
        for k, l in _kl_pairs(n):
            if not _section5_window(n, k, l):
                continue
            prof = DigitProfile.for_F(n, k, l)
            p_, q_ = prof.p, prof.q
            bp, bq = prof.b[p_ - 1], prof.b[q_ - 1]
            tally = _Tally()
            for tau, members in _by_type(n, k).items():
                jp, jq = _digit_slots(tau, bp, bq)
                if jp != jq:
                    rule = "all"
                elif bp > bq or bp > l - k:
                    rule = "component"
                elif _digit_slots(tau, prof.b[p_ - 2])[0] == jp:
                    rule = "component"
                else:
                    rule = "none"
                for p in members:
                    if rule == "all":
                        predicted = True
                    elif rule == "none":
                        predicted = False
                    else:
                        predicted = _in_T0(k_data(p, k).last_row[jp], l - k)
                    tally.check(in_T(p, k, l) == predicted, {"p": list(p), "type": list(tau), "rule": rule})
            yield tally.emit({"n": n, "k": k, "l": l})


@claim("reduction.core_part", "lemmas")
def _c_core_part(b: Bounds):
    for n in range(3, b.lemmas + 1):
        for k, l in _kl_pairs(n):
            prof = DigitProfile.for_F(n, k, l)
            nbar = prof.nbar
            if nbar == n or nbar < (1 << k) + (1 << l):
                continue
            big, small = _by_type(n, k), _by_type(nbar, k)
            for tau in sorted(big):
                t_big = sum(in_T(p, k, l) for p in big[tau])
                t_small = sum(in_T(p, k, l) for p in small.get(tau, []))
                ps = {"n": n, "k": k, "l": l, "type": list(tau)}
                yield dict(ps, set="T"), prof.core_factor * t_small, t_big
                f_small = len(small.get(tau, [])) - t_small
                yield dict(ps, set="F"), prof.core_factor * f_small, len(big[tau]) - t_big


# ----------------------------------------------------------------------------
# runner


def _run_family(cid: str, bounds: Bounds) -> list[ClaimResult]:
    fam = REGISTRY[cid]
    out = []
    start = time.perf_counter()
    for params, expected, actual in fam.func(bounds):
        now = time.perf_counter()
        out.append(ClaimResult(cid, _plain(params), _plain(expected), _plain(actual),
                               expected == actual, (now - start) * 1000))
        start = now
    return out


def clear_caches():
    """Drop every memo table, e.g. before timing a cold run."""
    from . import abacus, characters, operators, tower

    for fn in (characters._mn, operators._f, tower._q2, tower._k_data, tower._is_odd,
               tower._enumerate_odd, abacus._core, _runner_data):
        fn.cache_clear()


def workers_from_env(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, default)))
    except ValueError:
        return default


def run_claims(ids: Iterable[str], bounds: Bounds, workers: int | None = None) -> VerificationReport:
    """Run the named claim families; results come back canonically sorted."""
    ids = sorted(ids)
    workers = workers_from_env() if workers is None else max(1, workers)
    if workers == 1 or len(ids) == 1:
        results = [r for cid in ids for r in _run_family(cid, bounds)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_run_family, ids, [bounds] * len(ids))
            results = [r for chunk in chunks for r in chunk]
    results.sort(key=ClaimResult.sort_key)
    return VerificationReport(bounds=asdict(bounds), claims=results)


def claim_ids(suite: str = "all") -> list[str]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return sorted(cid for cid, fam in REGISTRY.items() if suite == "all" or fam.suite == suite)


def verify_all(max_n: int = 48, suite: str = "all", workers: int | None = None,
               bounds: Bounds | None = None) -> VerificationReport:
    """Run every registered claim (or one suite) with sizes capped at ``max_n``."""
    if max_n < 8:
        raise ValueError("max_n must be at least 8")
    bounds = (bounds or Bounds()).capped(max_n)
    return run_claims(claim_ids(suite), bounds, workers)


def verify_structure_lemmas(max_n: int = 40, workers: int | None = None) -> VerificationReport:
    ids = [cid for cid in claim_ids("lemmas") if cid.startswith("lemma.")]
    return run_claims(ids, Bounds().capped(max_n), workers)
