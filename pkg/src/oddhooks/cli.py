"""Command-line interface: ``python -m oddhooks <command> ...``.

Exit status is 0 on success, 1 when a verification or oracle cross-check
fails, 2 on a usage error (including malformed partitions).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .abacus import normalized_abacus
from .characters import mn_value, parse_cycle_type
from .counting import Fkl, Gk, Tkl
from .operators import classify_omega_type, f_with_hook, two_chain
from .partition import Partition, parse_partition
from .tower import core_tower, enumerate_odd, is_odd, quotient_tower
from .verify import SUITES, brute_F, brute_G, brute_T, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cycles(text: str):
    try:
        return parse_cycle_type(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddhooks", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    odd = sub.add_parser("odd", help="odd partitions")
    odd.add_argument("action", choices=("list",))
    odd.add_argument("n", type=int)

    ap = sub.add_parser("apply", help="apply f_k and show the removed hook")
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("partition", type=_partition)

    ch = sub.add_parser("chain", help="2-chain of a partition")
    ch.add_argument("partition", type=_partition)

    cv = sub.add_parser("char", help="character value by the Murnaghan-Nakayama rule")
    cv.add_argument("partition", type=_partition)
    cv.add_argument("--class", dest="cycles", type=_cycles, required=True)

    cl = sub.add_parser("classify", help="commuting type (1+, 1-, 2) of f_0 and f_l")
    cl.add_argument("--l", type=int, required=True)
    cl.add_argument("partition", type=_partition)

    co = sub.add_parser("count", help="closed-form counts")
    co.add_argument("set", choices=("G", "T", "F"))
    co.add_argument("--n", type=int, required=True)
    co.add_argument("--k", type=int, required=True)
    co.add_argument("--l", type=int)
    co.add_argument("--oracle", action="store_true", help="cross-check by exhaustive count")

    tw = sub.add_parser("tower", help="2-quotient and 2-core towers")
    tw.add_argument("partition", type=_partition)
    tw.add_argument("--depth", type=int, default=2)
    tw.add_argument("--show-abacus", type=int, metavar="E", help="also print the normalized E-abacus")

    ve = sub.add_parser("verify", help="run the verification suite")
    ve.add_argument("--max-n", type=int, default=48)
    ve.add_argument("--suite", choices=("all",) + SUITES, default="all")
    ve.add_argument("--workers", type=int, help="worker processes (default: $ODDHOOKS_WORKERS or 1)")
    ve.add_argument("--out", type=Path, help="also write the JSON report here")
    return parser


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(fmt: str, data: dict, text: str, rows):
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    elif fmt == "csv":
        print(_csv(rows))
    else:
        print(text)


def _hook_dict(h) -> dict:
    return {"row": h.row, "col": h.col, "length": h.length, "arm": h.arm, "leg": h.leg}


def _cmd_odd(args):
    ps = enumerate_odd(args.n)
    data = {"n": args.n, "count": len(ps), "partitions": [list(p) for p in ps]}
    _emit(args.format, data, "\n".join(map(str, ps)), [["partition"]] + [[str(p)] for p in ps])
    return EXIT_OK


def _cmd_apply(args):
    res, h = f_with_hook(args.k, args.partition)
    data = {"input": list(args.partition), "k": args.k, "result": list(res), "hook": _hook_dict(h)}
    text = f"{res}\nremoved {h.length}-hook at ({h.row},{h.col}), arm {h.arm}, leg {h.leg}"
    rows = [["result", "row", "col", "length", "arm", "leg"], [str(res), h.row, h.col, h.length, h.arm, h.leg]]
    _emit(args.format, data, text, rows)
    return EXIT_OK


def _cmd_chain(args):
    chain = two_chain(args.partition)
    data = {"input": list(args.partition), "chain": None if chain is None else [list(p) for p in chain]}
    text = "no 2-chain" if chain is None else " -> ".join(map(str, chain))
    rows = [["step", "partition"]] + [[i, str(p)] for i, p in enumerate(chain or [])]
    _emit(args.format, data, text, rows)
    return EXIT_OK


def _cmd_char(args):
    value = mn_value(args.partition, args.cycles, max_n=None)
    data = {"partition": list(args.partition), "class": list(args.cycles), "value": value}
    _emit(args.format, data, str(value), [["partition", "class", "value"], [str(args.partition), str(args.cycles), value]])
    return EXIT_OK


def _cmd_classify(args):
    kind = classify_omega_type(args.partition, args.l)
    data = {"partition": list(args.partition), "l": args.l, "type": kind}
    _emit(args.format, data, kind, [["partition", "l", "type"], [str(args.partition), args.l, kind]])
    return EXIT_OK


def _cmd_count(args):
    n, k, l = args.n, args.k, args.l
    if args.set == "G":
        if l is not None:
            raise UsageError("count G takes no --l")
        label, value = f"G_{k}({n})", Gk(n, k)
        oracle = (lambda: brute_G(n, k))
    else:
        if l is None:
            raise UsageError(f"count {args.set} needs --l")
        label = f"{args.set}_{{{k},{l}}}({n})"
        value = (Tkl if args.set == "T" else Fkl)(n, k, l)
        oracle = (lambda: (brute_T if args.set == "T" else brute_F)(n, k, l))
    data = {"formula": label, "value": value}
    text = f"{label} = {value}"
    rows = [["formula", "value"], [label, value]]
    status = EXIT_OK
    if args.oracle:
        ov = oracle()
        data.update(oracle_value=ov, match=ov == value)
        text += f"\noracle {ov}, {'match' if ov == value else 'MISMATCH'}"
        rows = [rows[0] + ["oracle_value", "match"], rows[1] + [ov, ov == value]]
        status = EXIT_OK if ov == value else EXIT_FAIL
    _emit(args.format, data, text, rows)
    return status


def _cmd_tower(args):
    p = args.partition
    qt, ct = quotient_tower(p, args.depth), core_tower(p, args.depth)
    data = {"partition": list(p), "odd": is_odd(p), "quotient_tower": qt.to_json(),
            "core_tower": ct.to_json(), "core_sizes": list(ct.row_sizes)}
    lines = [f"{p} ({'odd' if is_odd(p) else 'not odd'})"]
    for k in range(args.depth + 1):
        lines.append(f"row {k}: quotients " + " | ".join(map(str, qt[k])) + "   cores " + " | ".join(map(str, ct[k])))
    if args.show_abacus:
        config = normalized_abacus(p, args.show_abacus)
        data["abacus"] = config.render().splitlines()
        lines += [f"normalized {args.show_abacus}-abacus:", config.render()]
    rows = [["row", "kind", "index", "partition"]]
    for k in range(args.depth + 1):
        rows += [[k, "quotient", i, str(x)] for i, x in enumerate(qt[k])]
        rows += [[k, "core", i, str(x)] for i, x in enumerate(ct[k])]
    _emit(args.format, data, "\n".join(lines), rows)
    return EXIT_OK


def _cmd_verify(args):
    if args.max_n < 8:
        raise UsageError("--max-n must be at least 8")
    report = verify_all(args.max_n, suite=args.suite, workers=args.workers)
    if args.out:
        args.out.write_text(report.to_json() + "\n")
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv().rstrip("\n"))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "odd": _cmd_odd, "apply": _cmd_apply, "chain": _cmd_chain, "char": _cmd_char,
    "classify": _cmd_classify, "count": _cmd_count, "tower": _cmd_tower, "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"oddhooks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
