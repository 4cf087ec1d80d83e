"""The q-deformed Fock space over Z[q,q^-1] and the reduced Fock space at q=1.

Basis vectors u_lambda are indexed by partitions.  Vectors are sparse maps
partition -> coefficient; the quantum space is indexed by p-strict
partitions, the reduced space by strict partitions only (non-strict terms
span a submodule at q=1 and are dropped).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator, Mapping

from .arith import (ONE, ZERO, GlobalParams, LaurentPoly, format_fraction,
                    is_power_of_two, pow2, quantum_factorial)
from .partitions import (Partition, addable_removable, add_node, c_nonzero,
                         content, format_partition, h_p, is_strict,
                         node_coeff_addable, node_coeff_removable, norm_q, parity,
                         remove_node, residue)


class _SparseVector:
    __slots__ = ("terms",)
    _zero: object = 0

    def __init__(self, terms: Mapping | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, lam: Partition, coeff=None):
        return cls({tuple(lam): cls._one() if coeff is None else coeff})

    @staticmethod
    def _one():
        return 1

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __getitem__(self, lam):
        return self.terms.get(tuple(lam), self._zero)

    def support(self) -> set:
        return set(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, self._zero) + v
        return type(self)(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return type(self)({k: v * c for k, v in self.terms.items()})

    def __repr__(self):
        inner = ", ".join(f"{format_partition(k) or '∅'}: {v}" for k, v in sorted(self.terms.items()))
        return f"{type(self).__name__}({{{inner}}})"


class QFockVector(_SparseVector):
    __slots__ = ()
    _zero = ZERO

    @staticmethod
    def _one():
        return ONE

    def to_json(self) -> dict[str, str]:
        return {format_partition(k): str(v) for k, v in sorted(self.terms.items())}


class RFockVector(_SparseVector):
    __slots__ = ()
    _zero = Fraction(0)

    def __init__(self, terms=None):
        super().__init__({k: Fraction(v) for k, v in (terms or {}).items()})
        bad = [k for k in self.terms if not is_strict(k)]
        if bad:
            raise ValueError(f"reduced Fock vectors live on strict partitions: {bad}")

    @staticmethod
    def _one():
        return Fraction(1)

    def to_json(self) -> dict[str, str]:
        return {format_partition(k): format_fraction(v) for k, v in sorted(self.terms.items())}


def _linear(v: _SparseVector, action: Callable[[Partition], Iterable], cls):
    out: dict = {}
    zero = cls._zero
    for lam, c in v.terms.items():
        for mu, a in action(lam):
            out[mu] = out.get(mu, zero) + a * c
    return cls(out)


# ---------------------------------------------------------------- quantum space

def _pairing_with_weight(i: int, lam: Partition, prm: GlobalParams) -> int:
    """(alpha_i | Lambda_0 - cont(lam))."""
    c = content(lam, prm)
    return (1 if i == 0 else 0) - sum(prm.gram[i][j] * c[j] for j in prm.I)


@lru_cache(maxsize=None)
def _q_F_basis(i: int, lam: Partition, prm: GlobalParams):
    sets = addable_removable(lam, i, prm)
    return tuple((add_node(lam, B), node_coeff_addable(lam, B, i, prm, sets).value)
                 for B in sets.proper_addable)


@lru_cache(maxsize=None)
def _q_E_basis(i: int, lam: Partition, prm: GlobalParams):
    sets = addable_removable(lam, i, prm)
    return tuple((remove_node(lam, A), node_coeff_removable(lam, A, i, prm, sets).value)
                 for A in sets.proper_removable)


def q_apply_F(i: int, v: QFockVector, prm: GlobalParams) -> QFockVector:
    return _linear(v, lambda lam: _q_F_basis(i, lam, prm), QFockVector)


def q_apply_E(i: int, v: QFockVector, prm: GlobalParams) -> QFockVector:
    return _linear(v, lambda lam: _q_E_basis(i, lam, prm), QFockVector)


def q_apply_T(i: int, v: QFockVector, prm: GlobalParams, power: int = 1) -> QFockVector:
    """T_i^power; T_i acts on u_lambda by q^{(alpha_i|Lambda_0 - cont(lambda))}."""
    return QFockVector({lam: c.shift(power * _pairing_with_weight(i, lam, prm))
                        for lam, c in v.terms.items()})


def q_apply_word(word: Iterable[int], v: QFockVector, prm: GlobalParams) -> QFockVector:
    """F_{i_1} ... F_{i_n} v for word (i_1, ..., i_n); the rightmost letter acts first."""
    for i in reversed(list(word)):
        v = q_apply_F(i, v, prm)
    return v


def q_apply_F_divided(i: int, m: int, v: QFockVector, prm: GlobalParams) -> QFockVector:
    """F_i^m v / [m]_i^!, raising ArithmeticError if the division is not exact."""
    for _ in range(m):
        v = q_apply_F(i, v, prm)
    fact = quantum_factorial(m, i, prm)
    return QFockVector({lam: c.divmod_exact(fact) for lam, c in v.terms.items()})


def q_form(v: QFockVector, w: QFockVector, prm: GlobalParams) -> LaurentPoly:
    out = ZERO
    for lam, c in v.terms.items():
        d = w.terms.get(lam)
        if d:
            out = out + c * d * norm_q(lam, prm.p)
    return out


# ---------------------------------------------------------------- reduced space

@lru_cache(maxsize=None)
def _r_f_basis(i: int, lam: Partition, prm: GlobalParams) -> tuple[tuple[Partition, int], ...]:
    p = prm.p
    out = []
    n = len(lam)
    hp = h_p(lam, p)
    for row in range(1, n + 2):
        cur = lam[row - 1] if row <= n else 0
        if row > 1 and lam[row - 2] <= cur + 1:
            continue  # lambda^B must be a strict partition
        if residue(cur + 1, prm) != i:
            continue
        mu = lam[:row - 1] + (cur + 1,) + lam[row:] if row <= n else lam + (1,)
        out.append((mu, 2 if h_p(mu, p) == hp - 1 else 1))
    return tuple(out)


def r_apply_f(i: int, v: RFockVector, prm: GlobalParams) -> RFockVector:
    return _linear(v, lambda lam: _r_f_basis(i, lam, prm), RFockVector)


def r_apply_f_divided(i: int, m: int, v: RFockVector, prm: GlobalParams) -> RFockVector:
    for _ in range(m):
        v = r_apply_f(i, v, prm)
    return v.scale(Fraction(1, factorial(m))) if m > 1 else v


def r_apply_word(word: Iterable[int], v: RFockVector, prm: GlobalParams) -> RFockVector:
    for i in reversed(list(word)):
        v = r_apply_f(i, v, prm)
    return v


def r_form(v: RFockVector, w: RFockVector, prm: GlobalParams) -> Fraction:
    out = Fraction(0)
    for lam, c in v.terms.items():
        d = w.terms.get(lam)
        if d:
            out += c * d * 2 ** h_p(lam, prm.p)
    return out


# ---------------------------------------------------------------- monomials

@dataclass(frozen=True)
class DividedMonomial:
    """f_{i_1}^{(m_1)} ... f_{i_t}^{(m_t)}, stored in written order (leftmost first)."""
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if any(m < 0 for _, m in self.factors):
            raise ValueError("divided powers must be nonnegative")

    def __mul__(self, other: "DividedMonomial") -> "DividedMonomial":
        return DividedMonomial(self.factors + other.factors)

    def weight(self, prm: GlobalParams) -> tuple[int, ...]:
        w = [0] * (prm.ell + 1)
        for i, m in self.factors:
            w[i] += m
        return tuple(w)

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(f"f{i}" if m == 1 else f"f{i}^({m})" for i, m in self.factors)


def monomial_single(m: int, j: int, prm: GlobalParams) -> DividedMonomial:
    """f(m, j) = f_j^(m)...f_1^(m) f_0^(2m) f_1^(m)...f_j^(m) f_{j+1}^(2m)...f_{l-1}^(2m) f_l^(m)."""
    if j not in prm.J:
        raise ValueError(f"color {j} not in J={prm.J}")
    if m == 0:
        return DividedMonomial()
    ell = prm.ell
    fs = [(k, m) for k in range(j, 0, -1)]
    fs.append((0, 2 * m))
    fs += [(k, m) for k in range(1, j + 1)]
    fs += [(k, 2 * m) for k in range(j + 1, ell)]
    fs.append((ell, m))
    return DividedMonomial(tuple(fs))


def monomial_composite(mu, colors, prm: GlobalParams) -> DividedMonomial:
    """f(mu, j) = f(mu_n, j_n) ... f(mu_1, j_1)."""
    out = DividedMonomial()
    for m, j in zip(mu, colors):
        out = monomial_single(m, j, prm) * out
    return out


def monomials_omega(d: int, prm: GlobalParams) -> list[DividedMonomial]:
    """The l^d monomials whose sum is f(omega_d)."""
    from itertools import product
    return [monomial_composite((1,) * d, js, prm) for js in product(prm.J, repeat=d)]


def build_monomial(kind: str, prm: GlobalParams, *, m: int = 0, j: int = 0,
                   mu=(), colors=(), d: int = 0):
    if kind == "single":
        return monomial_single(m, j, prm)
    if kind == "composite":
        return monomial_composite(mu, colors, prm)
    if kind == "omega_sum":
        return monomials_omega(d, prm)
    raise ValueError(f"unknown monomial kind {kind!r}")


def r_apply_divided(mono: DividedMonomial, v: RFockVector, prm: GlobalParams) -> RFockVector:
    for i, m in reversed(mono.factors):
        v = r_apply_f_divided(i, m, v, prm)
    return v


def r_apply_omega(d: int, v: RFockVector, prm: GlobalParams) -> RFockVector:
    """f(omega_d) v, computed as (sum_j f(1, j))^d v."""
    singles = [monomial_single(1, j, prm) for j in prm.J]
    for _ in range(d):
        acc = RFockVector()
        for mono in singles:
            acc = acc + r_apply_divided(mono, v, prm)
        v = acc
    return v


def is_dyadic(v: RFockVector) -> bool:
    return all((c.denominator & (c.denominator - 1)) == 0 for c in v.terms.values())


# ---------------------------------------------------------------- chi basis

def chi_exponent(lam: Partition, prm: GlobalParams) -> int:
    """Integer e with chi_lambda = 2^e u_lambda."""
    num = parity(lam) - h_p(lam, prm.p) - c_nonzero(lam, prm)
    if num % 2:
        raise ArithmeticError(f"odd chi exponent numerator {num} for {lam}")
    return num // 2


def chi_convert(v: RFockVector, direction: str, prm: GlobalParams) -> RFockVector:
    """Change coordinates between the u basis and the chi basis.

    ``to_chi`` maps u-coordinates to chi-coordinates, ``from_chi`` the reverse.
    """
    if direction == "to_chi":
        sign = -1
    elif direction == "from_chi":
        sign = 1
    else:
        raise ValueError("direction must be 'to_chi' or 'from_chi'")
    return RFockVector({lam: c * pow2(sign * chi_exponent(lam, prm)) for lam, c in v.terms.items()})


__all__ = [
    "QFockVector", "RFockVector", "DividedMonomial", "q_apply_F", "q_apply_E", "q_apply_T",
    "q_apply_word", "q_apply_F_divided", "q_form", "r_apply_f", "r_apply_f_divided",
    "r_apply_word", "r_form", "monomial_single", "monomial_composite", "monomials_omega",
    "build_monomial", "r_apply_divided", "r_apply_omega", "chi_exponent", "chi_convert",
    "is_dyadic", "is_power_of_two",
]
