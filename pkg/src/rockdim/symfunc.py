"""Omega ⊗ Lambda^{⊗l} in the basis pi = P_{lam0} ⊗ s_{lam1} ⊗ ... ⊗ s_{lam_l}.

Elements are sparse maps from multipartitions with strict 0th component to
rationals.  Everything multiplicative goes through the three Pieri engines,
so every element built here is expressed in the same basis and equality is
structural.

With kappa = Q_{lam0} ⊗ s_{lam1} ⊗ ... = 2^{h(lam0)} pi dual to pi, the form
(f_0⊗...⊗f_l, g_0⊗...⊗g_l) = [f_0, g_0] <f_1, g_1> ... <f_l, g_l> is diagonal
in pi coordinates with weight 2^{-h(lam0)}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping

from .arith import GlobalParams, multinomial, pow2
from .partitions import (ColoredComposition, Multipartition, Partition, format_multipartition,
                         h, horizontal_strips, is_strict, q_skew, vertical_strips)


class SymElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Multipartition, Fraction | int] | None = None):
        t = {}
        for k, v in (terms or {}).items():
            if v:
                if not is_strict(k[0]):
                    raise ValueError(f"0th component must be strict: {k}")
                t[k] = Fraction(v)
        self.terms = t

    @classmethod
    def one(cls, prm: GlobalParams) -> "SymElement":
        return cls({empty_multi(prm): 1})

    @classmethod
    def basis(cls, mp: Multipartition, coeff=1) -> "SymElement":
        return cls({tuple(tuple(c) for c in mp): coeff})

    def __eq__(self, other):
        return isinstance(other, SymElement) and self.terms == other.terms

    def __add__(self, other: "SymElement") -> "SymElement":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return SymElement(t)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SymElement":
        return SymElement({k: v * c for k, v in self.terms.items()})

    def __getitem__(self, mp: Multipartition) -> Fraction:
        return self.terms.get(mp, Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SymElement({self.to_json()})"

    def to_json(self) -> dict[str, str]:
        return {format_multipartition(k): str(v) for k, v in sorted(self.terms.items())}


def empty_multi(prm: GlobalParams) -> Multipartition:
    return ((),) * (prm.ell + 1)


def _expand(v: SymElement, comp: int, step: Callable[[Partition], Iterable[tuple[Partition, int]]]) -> SymElement:
    out: dict[Multipartition, Fraction] = {}
    for mp, c in v.terms.items():
        for new, coeff in step(mp[comp]):
            key = mp[:comp] + (new,) + mp[comp + 1:]
            out[key] = out.get(key, 0) + c * coeff
    return SymElement(out)


def mult_pieri_h(v: SymElement, comp: int, r: int) -> SymElement:
    """v * h_r in the given component (1..l)."""
    if comp < 1:
        raise ValueError("h acts on components 1..l")
    return _expand(v, comp, lambda lam: ((mu, 1) for mu in horizontal_strips(lam, r)))


def mult_pieri_e(v: SymElement, comp: int, r: int) -> SymElement:
    """v * e_r in the given component (1..l)."""
    if comp < 1:
        raise ValueError("e acts on components 1..l")
    return _expand(v, comp, lambda lam: ((mu, 1) for mu in vertical_strips(lam, r)))


def _q_step(lam: Partition, r: int) -> Iterator[tuple[Partition, int]]:
    for mu in horizontal_strips(lam, r):
        if is_strict(mu):
            yield mu, 2 ** q_skew(mu, lam)


def mult_pieri_q(v: SymElement, r: int) -> SymElement:
    """v * q_r in component 0 (q_0 = 1, q_r = 2 P_(r))."""
    return _expand(v, 0, lambda lam: _q_step(lam, r))


def sym_inner(v: SymElement, w: SymElement) -> Fraction:
    small, big = (v, w) if len(v) <= len(w) else (w, v)
    out = Fraction(0)
    for k, c in small.terms.items():
        d = big.terms.get(k)
        if d:
            out += c * d * pow2(-h(k[0]))
    return out


def to_kappa(v: SymElement) -> SymElement:
    """Coordinates of v in the kappa basis (kappa = 2^{h(lam0)} pi)."""
    return SymElement({k: c * pow2(-h(k[0])) for k, c in v.terms.items()})


# ---------------------------------------------------------------- Pi elements

def _times_pi_single(v: SymElement, m: int, j: int, prm: GlobalParams) -> SymElement:
    """v * Pi_{(m), j}."""
    if j not in prm.J:
        raise ValueError(f"color {j} not in J={prm.J}")
    out = SymElement()
    for k in range(m + 1):
        if j == 0:
            part = mult_pieri_q(v, k)
        else:
            part = mult_pieri_h(v, j, k)
        out = out + mult_pieri_e(part, j + 1, m - k)
    return out


def build_Pi_single(m: int, j: int, prm: GlobalParams) -> SymElement:
    return _times_pi_single(SymElement.one(prm), m, j, prm)


@lru_cache(maxsize=None)
def _build_Pi(mu: tuple[int, ...], colors: tuple[int, ...], prm: GlobalParams) -> SymElement:
    if not mu:
        return SymElement.one(prm)
    head = _build_Pi(mu[:-1], colors[:-1], prm)
    return _times_pi_single(head, mu[-1], colors[-1], prm)


def build_Pi(cc: ColoredComposition, prm: GlobalParams) -> SymElement:
    """Pi_{mu, j}, built one part at a time: Pi(mu, j) = Pi(mu', j') Pi((mu_n), j_n)."""
    cc.check(prm)
    return _build_Pi(cc.mu, cc.colors, prm)


@lru_cache(maxsize=None)
def build_Pi_omega(d: int, prm: GlobalParams) -> SymElement:
    """Sum of Pi_{omega_d, j} over all j in J^d."""
    out = SymElement()
    for js in product(prm.J, repeat=d):
        out = out + _build_Pi((1,) * d, js, prm)
    return out


def power_element(ks: tuple[int, ...], prm: GlobalParams) -> SymElement:
    """q_1^{k_0} ⊗ s_(1)^{k_1} ⊗ ... ⊗ s_(1)^{k_l}."""
    if len(ks) != prm.ell + 1:
        raise ValueError("need one exponent per component")
    v = SymElement.one(prm)
    for _ in range(ks[0]):
        v = mult_pieri_q(v, 1)
    for comp in range(1, prm.ell + 1):
        for _ in range(ks[comp]):
            v = mult_pieri_h(v, comp, 1)
    return v


def _weak_compositions(d: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (d,)
        return
    for k in range(d + 1):
        for rest in _weak_compositions(d - k, n - 1):
            yield (k,) + rest


def Pi_omega_closed_form(d: int, prm: GlobalParams) -> SymElement:
    """sum over k_0+...+k_l = d of 2^{k_1+...+k_{l-1}} C(d; k) q_1^{k_0} ⊗ s_(1)^{k_1} ⊗ ..."""
    out = SymElement()
    for ks in _weak_compositions(d, prm.ell + 1):
        coeff = 2 ** sum(ks[1:prm.ell]) * multinomial(ks)
        out = out + power_element(ks, prm).scale(coeff)
    return out


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class ColorMatrix:
    entries: tuple[tuple[int, ...], ...]

    def column_sum(self, i: int) -> int:
        return sum(row[i] for row in self.entries)

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.entries)

    def check(self, cc: ColoredComposition, prm: GlobalParams) -> "ColorMatrix":
        if len(self.entries) != cc.n:
            raise ValueError("matrix must have one row per part")
        for row, m, j in zip(self.entries, cc.mu, cc.colors):
            if len(row) != prm.ell + 1 or any(x < 0 for x in row):
                raise ValueError(f"bad row {row}")
            if sum(row) != m:
                raise ValueError(f"row {row} does not sum to {m}")
            if any(x for i, x in enumerate(row) if i not in (j, j + 1)):
                raise ValueError(f"row {row} is supported outside colors {j}, {j + 1}")
        return self


def enumerate_M(cc: ColoredComposition, prm: GlobalParams) -> list[ColorMatrix]:
    cc.check(prm)
    choices = []
    for m, j in zip(cc.mu, cc.colors):
        rows = []
        for k in range(m + 1):
            row = [0] * (prm.ell + 1)
            row[j] = k
            row[j + 1] = m - k
            rows.append(tuple(row))
        choices.append(rows)
    return [ColorMatrix(tuple(rows)) for rows in product(*choices)]


def psi_A(A: ColorMatrix, cc: ColoredComposition, prm: GlobalParams) -> SymElement:
    A.check(cc, prm)
    v = SymElement.one(prm)
    for row, j in zip(A.entries, cc.colors):
        v = mult_pieri_q(v, row[0])
        for i in range(1, prm.ell + 1):
            if i == j:
                v = mult_pieri_h(v, i, row[i])
            elif i == j + 1:
                v = mult_pieri_e(v, i, row[i])
    return v


# ---------------------------------------------------------------- inner products

def pi_omega_inner(cc: ColoredComposition, prm: GlobalParams) -> Fraction:
    """(Pi_{mu, j}, Pi_{omega_d})."""
    return sym_inner(build_Pi(cc, prm), build_Pi_omega(cc.d, prm))


def ell_minus_one_mass(cc: ColoredComposition, prm: GlobalParams) -> int:
    """Total of the parts mu_r whose color is l-1."""
    return sum(m for m, j in zip(cc.mu, cc.colors) if j == prm.ell - 1)


def closed_formula(cc: ColoredComposition, prm: GlobalParams) -> int:
    cc.check(prm)
    m = ell_minus_one_mass(cc, prm)
    return multinomial(cc.mu) * 4 ** (cc.d - m) * 3 ** m


def matrix_sum_formula(cc: ColoredComposition, prm: GlobalParams) -> int:
    """sum over A in M(mu, j) of 2^{d - |a_{*,l}|} prod_r C(mu_r; a_{r,*})."""
    total = 0
    for A in enumerate_M(cc, prm):
        term = 2 ** (cc.d - A.column_sum(prm.ell))
        for row in A.entries:
            term *= multinomial(row)
        total += term
    return total


def individual_inner_formula(A: ColorMatrix, ks: tuple[int, ...], prm: GlobalParams) -> int:
    """Predicted (psi_A, power_element(ks))."""
    if any(A.column_sum(i) != k for i, k in enumerate(ks)):
        return 0
    out = 2 ** A.column_sum(0)
    for i in prm.I:
        out *= multinomial(A.column(i))
    return out
