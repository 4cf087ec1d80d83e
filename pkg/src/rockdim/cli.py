"""Command line front end.  Exit codes: 0 ok, 1 invalid input, 2 mismatch."""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from .arith import format_fraction, params
from .barcore import core_quotient, find_rock_cores, is_bar_core, is_rock
from .fock import DividedMonomial, RFockVector, monomial_composite, r_apply_divided
from .partitions import (ColoredComposition, PartitionError, format_multipartition,
                         format_partition, is_p_strict, parse_partition)
from .symfunc import closed_formula, pi_omega_inner
from .verify import fock_side, full_sweep
from .weyl import core_from_word, parse_word

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class InvalidInput(Exception):
    pass


def _ints(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(t) for t in s.split(","))
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {s!r}") from None


def _partition(s: str):
    try:
        return parse_partition(s)
    except (PartitionError, ValueError) as e:
        raise InvalidInput(str(e)) from None


def _emit(obj, fmt: str):
    if fmt == "table":
        for k in sorted(obj):
            v = obj[k]
            print(f"{k:>10}  {json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v}")
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


_FACTOR = re.compile(r"f(\d+)(?:\^\((\d+)\))?$")
_PAIR = re.compile(r"\((\d+),(\d+)\)$")


def parse_monomial(text: str, prm) -> DividedMonomial:
    """Either generator factors like "f0 f1^(2)" or blocks like "(m,j);(m,j)".

    Both read as a written product: the rightmost factor acts first.
    """
    text = text.strip()
    if not text:
        return DividedMonomial()
    if text.startswith("("):
        out = DividedMonomial()
        for tok in text.replace(" ", "").split(";"):
            m = _PAIR.match(tok)
            if not m:
                raise InvalidInput(f"bad block {tok!r}; expected (m,j)")
            k, j = int(m.group(1)), int(m.group(2))
            if j not in prm.J:
                raise InvalidInput(f"color {j} not in J")
            out = out * monomial_composite((k,), (j,), prm)
        return out
    factors = []
    for tok in text.replace("*", " ").split():
        m = _FACTOR.match(tok)
        if not m:
            raise InvalidInput(f"bad factor {tok!r}; expected f<i> or f<i>^(<m>)")
        i = int(m.group(1))
        if i not in prm.I:
            raise InvalidInput(f"generator index {i} not in 0..{prm.ell}")
        factors.append((i, int(m.group(2) or 1)))
    return DividedMonomial(tuple(factors))


def _parse_cc(mu: str, colors: str, prm) -> ColoredComposition:
    mu_t, col_t = _ints(mu), _ints(colors)
    if len(mu_t) != len(col_t):
        raise InvalidInput("--mu and --colors need the same number of entries")
    if any(x < 0 for x in mu_t):
        raise InvalidInput("composition parts must be nonnegative")
    if any(j not in prm.J for j in col_t):
        raise InvalidInput(f"colors must lie in J = 0..{prm.ell - 1}")
    return ColoredComposition(mu_t, col_t)


def _core_arg(args, prm):
    if args.word is not None:
        try:
            return core_from_word(parse_word(args.word, prm), prm)
        except ValueError as e:
            raise InvalidInput(str(e)) from None
    core = _partition(args.core or "")
    if not is_p_strict(core, prm.p) or not is_bar_core(core, prm):
        raise InvalidInput(f"{format_partition(core) or '()'} is not a {prm.p}-bar core")
    return core


# ---------------------------------------------------------------- commands

def cmd_dim(args) -> int:
    prm = params(args.ell)
    core = _core_arg(args, prm)
    cc = _parse_cc(args.mu, args.colors, prm)
    if cc.d != args.d:
        raise InvalidInput(f"mu sums to {cc.d}, not d={args.d}")
    rock = is_rock(core, args.d, prm)
    if args.strict_hypothesis and not rock:
        raise InvalidInput(f"({format_partition(core)}, d={args.d}) is not RoCK")
    out = {"core": format_partition(core), "d": args.d, "rock": rock}
    methods = ("fock", "sym", "formula") if args.method == "all" else (args.method,)
    vals = {}
    if "fock" in methods:
        vals["fock"] = fock_side(core, args.d, cc, prm)
    if "sym" in methods:
        vals["sym"] = pi_omega_inner(cc, prm)
    if "formula" in methods:
        vals["formula"] = closed_formula(cc, prm)
    out.update({k: format_fraction(v) for k, v in vals.items()})
    agree = len(set(vals.values())) == 1
    if args.method == "all":
        out["agree"] = agree
    _emit(out, args.format)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_core(args) -> int:
    if args.p < 3 or args.p % 2 == 0:
        raise InvalidInput("--p must be an odd integer >= 3")
    prm = params((args.p - 1) // 2)
    lam = _partition(args.partition)
    if not is_p_strict(lam, prm.p):
        raise InvalidInput(f"{format_partition(lam)} is not {prm.p}-strict")
    data = core_quotient(lam, prm)
    _emit({"core": format_partition(data.core), "weight": data.weight,
           "quotient": format_multipartition(data.quotient)}, args.format)
    return EXIT_OK


def cmd_fock_apply(args) -> int:
    prm = params(args.ell)
    start = _partition(args.start)
    if not is_p_strict(start, 0):
        raise InvalidInput("the reduced Fock space is spanned by strict partitions")
    if args.cc is not None:
        mu, _, colors = args.cc.partition("/")
        cc = _parse_cc(mu, colors, prm)
        mono = monomial_composite(cc.mu, cc.colors, prm)
    else:
        mono = parse_monomial(args.monomial or "", prm)
    v = r_apply_divided(mono, RFockVector.basis(start), prm)
    print(json.dumps(v.to_json(), sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    ells = _ints(args.ell)
    if not ells or any(e < 1 for e in ells):
        raise InvalidInput("--ell needs positive integers")
    report = full_sweep(ells, args.d_max, args.n_max, args.cores_per_case, jobs=args.jobs)
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    summary = {k: report[k] for k in ("count", "mismatches", "status")}
    _emit(summary, args.format)
    return EXIT_OK if report["status"] == "all-agree" else EXIT_MISMATCH


def cmd_rock_find(args) -> int:
    prm = params(args.ell)
    cores = find_rock_cores(args.d, prm, args.max_size)
    _emit({"d": args.d, "ell": args.ell, "cores": [format_partition(c) for c in cores]}, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rockdim", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("dim", help="Shapovalov value / block dimension for one colored composition")
    p.add_argument("--ell", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--core", help="bar-core as comma-separated parts")
    g.add_argument("--word", help="Weyl word, comma-separated, rightmost letter first")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--colors", required=True)
    p.add_argument("--method", choices=("fock", "sym", "formula", "all"), default="all")
    p.add_argument("--strict-hypothesis", action="store_true",
                   help="reject (core, d) that is not RoCK")
    common(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("core", help="bar-core, bar-weight and bar-quotient")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--partition", required=True)
    common(p)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("fock-apply", help="apply a divided-power monomial in the reduced Fock space")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--start", default="")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--monomial")
    g.add_argument("--cc", help="colored composition as mu/colors, e.g. 2,1/0,1")
    p.set_defaults(func=cmd_fock_apply)

    p = sub.add_parser("verify", help="three-way sweep over RoCK cores")
    p.add_argument("--ell", default="1,2")
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--cores-per-case", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rock-find", help="list RoCK bar-cores up to a size")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_rock_find)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        ell = getattr(args, "ell", 1)
        if isinstance(ell, int) and ell < 1:
            raise InvalidInput("--ell must be positive")
        if getattr(args, "d", 0) < 0:
            raise InvalidInput("--d must be nonnegative")
        return args.func(args)
    except (InvalidInput, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
