"""End-to-end checks: Fock-space values against the symmetric-function inner
product and the closed dimension formula, plus the coefficient-level
descriptions of f(k, j) u_alpha and f(mu, j) u_rho on RoCK cores."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable

from .arith import format_fraction, params, pow2
from .barcore import (bar_quotient, enumerate_class, find_rock_cores, is_bar_core, is_rock,
                      NotACoreError, smallest_rock_core)
from .fock import (RFockVector, chi_convert, monomial_composite, monomial_single,
                   r_apply_divided, r_apply_omega, r_form)
from .partitions import (ColoredComposition, K_coeff, Partition, compositions, conjugate,
                         contains, format_partition, h, parity, q_skew, size)
from .symfunc import closed_formula, sym_inner, build_Pi, pi_omega_inner

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _omega_vector(core: Partition, d: int, prm) -> RFockVector:
    return r_apply_omega(d, RFockVector.basis(core), prm)


def fock_vector(core: Partition, cc: ColoredComposition, prm) -> RFockVector:
    cc.check(prm)
    return r_apply_divided(monomial_composite(cc.mu, cc.colors, prm), RFockVector.basis(core), prm)


def fock_side(core: Partition, d: int, cc: ColoredComposition, prm) -> Fraction:
    """(f(mu, j) u_core, f(omega_d) u_core) in the reduced Fock space."""
    if cc.d != d:
        raise ValueError(f"composition {cc.mu} does not sum to d={d}")
    if not is_bar_core(core, prm):
        raise NotACoreError(f"{core} is not a {prm.p}-bar core")
    return r_form(fock_vector(core, cc, prm), _omega_vector(core, d, prm), prm)


def fock_pairing(core: Partition, cc1: ColoredComposition, cc2: ColoredComposition, prm) -> Fraction:
    return r_form(fock_vector(core, cc1, prm), fock_vector(core, cc2, prm), prm)


def sym_pairing(cc1: ColoredComposition, cc2: ColoredComposition, prm) -> Fraction:
    return sym_inner(build_Pi(cc1, prm), build_Pi(cc2, prm))


@dataclass
class CheckReport:
    ok: bool
    checked: int
    mismatches: list = field(default_factory=list)


def expansion_check(core: Partition, d: int, cc: ColoredComposition, prm) -> CheckReport:
    """f(mu, j) u_core against sum_lam K(quot(lam); mu, j) 2^{-h(lam0)} u_lam."""
    got = fock_vector(core, cc, prm)
    bad = []
    classes = enumerate_class(core, d, prm, strict_only=True)
    for lam in classes:
        quot = bar_quotient(lam, prm)
        want = K_coeff(quot, cc, prm) * pow2(-h(quot[0]))
        if got[lam] != want:
            bad.append({"partition": format_partition(lam), "fock": format_fraction(got[lam]),
                        "tableaux": format_fraction(want)})
    stray = got.support() - set(classes)
    bad += [{"partition": format_partition(lam), "fock": format_fraction(got[lam]),
             "tableaux": "0"} for lam in sorted(stray)]
    return CheckReport(not bad, len(classes), bad)


def _strip_added(small: Partition, big: Partition, vertical: bool) -> bool:
    """big/small is a horizontal (or vertical) strip."""
    if not contains(big, small):
        return False
    if vertical:
        small, big = conjugate(small), conjugate(big)
    return all(big[r + 1] <= (small[r] if r < len(small) else 0) for r in range(len(big) - 1))


def cmatt_prediction(core: Partition, alpha: Partition, k: int, j: int, prm) -> dict[Partition, Fraction]:
    """Quotient-level description of f(k, j) u_alpha."""
    qa = bar_quotient(alpha, prm)
    c = sum(size(x) for x in qa)
    out = {}
    for lam in enumerate_class(core, c + k, prm, strict_only=True):
        ql = bar_quotient(lam, prm)
        if any(ql[i] != qa[i] for i in prm.I if i not in (j, j + 1)):
            continue
        if not (_strip_added(qa[j], ql[j], vertical=False) and
                _strip_added(qa[j + 1], ql[j + 1], vertical=True)):
            continue
        out[lam] = pow2(q_skew(ql[0], qa[0]) + h(qa[0]) - h(ql[0]))
    return out


def cmatt_check(core: Partition, alpha: Partition, k: int, j: int, prm) -> CheckReport:
    got = r_apply_divided(monomial_single(k, j, prm), RFockVector.basis(alpha), prm)
    want = cmatt_prediction(core, alpha, k, j, prm)
    bad = [{"partition": format_partition(lam), "fock": format_fraction(got[lam]),
            "predicted": format_fraction(want.get(lam, Fraction(0)))}
           for lam in sorted(got.support() | set(want)) if got[lam] != want.get(lam, 0)]
    return CheckReport(not bad, len(want), bad)


def lmatt_check(core: Partition, alpha: Partition, k: int, j: int, prm) -> CheckReport:
    """The same action written in the chi basis, against the chi-basis exponents."""
    v = chi_convert(RFockVector.basis(alpha), "from_chi", prm)  # chi_alpha in u coordinates
    got = chi_convert(r_apply_divided(monomial_single(k, j, prm), v, prm), "to_chi", prm)
    qa = bar_quotient(alpha, prm)
    want = {}
    for lam in cmatt_prediction(core, alpha, k, j, prm):
        ql = bar_quotient(lam, prm)
        num = k * (2 * prm.ell - 1) + h(qa[0]) - h(ql[0]) + parity(alpha) - parity(lam)
        if num % 2:
            raise ArithmeticError(f"odd exponent numerator for {alpha} -> {lam}")
        want[lam] = pow2(q_skew(ql[0], qa[0]) + num // 2)
    bad = [{"partition": format_partition(lam), "fock": format_fraction(got[lam]),
            "predicted": format_fraction(want.get(lam, Fraction(0)))}
           for lam in sorted(got.support() | set(want)) if got[lam] != want.get(lam, 0)]
    return CheckReport(not bad, len(want), bad)


# ---------------------------------------------------------------- sweep

def colored_compositions(d: int, n_max: int, prm) -> Iterable[ColoredComposition]:
    for n in range(1, n_max + 1):
        for mu in compositions(d, n):
            for js in product(prm.J, repeat=n):
                yield ColoredComposition(mu, js)


@dataclass
class Instance:
    ell: int
    core: str
    d: int
    mu: list
    colors: list
    fock_value: str
    sym_value: str
    formula_value: str
    rock: bool
    status: str


def evaluate_instance(ell: int, core: Partition, d: int, cc: ColoredComposition) -> Instance:
    prm = params(ell)
    fv = fock_side(core, d, cc, prm)
    sv = pi_omega_inner(cc, prm)
    cf = closed_formula(cc, prm)
    rock = is_rock(core, d, prm)
    agree = fv == sv == cf
    status = "agree" if agree else ("mismatch" if rock else "differs-off-rock")
    return Instance(ell, format_partition(core), d, list(cc.mu), list(cc.colors),
                    format_fraction(fv), format_fraction(sv), str(cf), rock, status)


def _run_case(args):
    ell, core, d, n_max = args
    prm = params(ell)
    return [evaluate_instance(ell, core, d, cc) for cc in colored_compositions(d, n_max, prm)]


def sweep_cores(ell: int, d: int, cores_per_case: int) -> list[Partition]:
    prm = params(ell)
    limit = size(smallest_rock_core(d, prm))
    while True:
        cores = find_rock_cores(d, prm, limit, method="charge")
        if len(cores) >= cores_per_case:
            return sorted(cores, key=lambda c: (size(c), c))[:cores_per_case]
        limit += prm.p


def full_sweep(ells: Iterable[int] = (1, 2), d_max: int = 3, n_max: int = 3, cores_per_case: int = 1,
               extra_cores: Iterable[tuple[int, Partition]] = (), jobs: int = 1) -> dict:
    """Three-way comparison over RoCK cores; extra (ell, core) pairs are
    evaluated too and only recorded when they are not RoCK."""
    cases = []
    for ell in ells:
        for d in range(1, d_max + 1):
            for core in sweep_cores(ell, d, cores_per_case):
                cases.append((ell, core, d, n_max))
    for ell, core in extra_cores:
        for d in range(1, d_max + 1):
            cases.append((ell, tuple(core), d, n_max))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_case, cases))
    else:
        chunks = [_run_case(c) for c in cases]
    instances = [inst for chunk in chunks for inst in chunk]
    mismatches = [i for i in instances if i.status == "mismatch"]
    log.info("swept %d instances, %d mismatches", len(instances), len(mismatches))
    return {
        "instances": [asdict(i) for i in instances],
        "count": len(instances),
        "mismatches": len(mismatches),
        "status": "all-agree" if not mismatches else "mismatch",
    }
