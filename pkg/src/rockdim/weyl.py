"""Weights in the span of Lambda_0 and the simple roots, simple reflections,
and extremal vectors of the basic representation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import GlobalParams
from .barcore import is_rock, theta
from .fock import RFockVector, r_apply_f_divided
from .partitions import Partition


@dataclass(frozen=True)
class Weight:
    """lambda0_coeff * Lambda_0 + sum alpha_coeffs[i] * alpha_i."""

    lambda0_coeff: int
    alpha_coeffs: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.lambda0_coeff + other.lambda0_coeff,
                      tuple(a + b for a, b in zip(self.alpha_coeffs, other.alpha_coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(-self.lambda0_coeff, tuple(-a for a in self.alpha_coeffs))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def scale(self, k: int) -> "Weight":
        return Weight(k * self.lambda0_coeff, tuple(k * a for a in self.alpha_coeffs))

    def in_root_cone(self) -> bool:
        return self.lambda0_coeff == 0 and all(a >= 0 for a in self.alpha_coeffs)

    def __str__(self):
        terms = []
        if self.lambda0_coeff:
            terms.append(f"{self.lambda0_coeff}*L0")
        terms += [f"{a}*a{i}" for i, a in enumerate(self.alpha_coeffs) if a]
        return " + ".join(terms) if terms else "0"


def lambda0(prm: GlobalParams) -> Weight:
    return Weight(1, (0,) * (prm.ell + 1))


def simple_root(i: int, prm: GlobalParams) -> Weight:
    return Weight(0, tuple(int(k == i) for k in prm.I))


def null_root(prm: GlobalParams) -> Weight:
    return Weight(0, prm.delta)


def root_weight(coeffs: Sequence[int], prm: GlobalParams) -> Weight:
    if len(coeffs) != prm.ell + 1:
        raise ValueError(f"expected {prm.ell + 1} root coordinates")
    return Weight(0, tuple(coeffs))


def form(x: Weight, y: Weight, prm: GlobalParams) -> int:
    """(x|y) with (Lambda_0|alpha_i) = delta_{i0} and (Lambda_0|Lambda_0) = 0."""
    g = prm.gram
    out = x.lambda0_coeff * y.alpha_coeffs[0] + y.lambda0_coeff * x.alpha_coeffs[0]
    for i, a in enumerate(x.alpha_coeffs):
        if a:
            out += a * sum(g[i][j] * b for j, b in enumerate(y.alpha_coeffs))
    return out


def pair(x: Weight, i: int, prm: GlobalParams) -> int:
    """(x|alpha_i^vee) = 2(x|alpha_i)/(alpha_i|alpha_i)."""
    num = 2 * form(x, simple_root(i, prm), prm)
    q, r = divmod(num, prm.gram[i][i])
    if r:
        raise ArithmeticError(f"non-integral coroot pairing for {x} and i={i}")
    return q


def reflect(x: Weight, i: int, prm: GlobalParams) -> Weight:
    return x - simple_root(i, prm).scale(pair(x, i, prm))


def apply_word(word: Sequence[int], x: Weight, prm: GlobalParams) -> Weight:
    """w x for w = r_{word[0]} ... r_{word[-1]}; the last letter acts first."""
    for i in reversed(word):
        x = reflect(x, i, prm)
    return x


@dataclass(frozen=True)
class Exponents:
    values: tuple[int, ...]

    @property
    def admissible(self) -> bool:
        return all(a >= 0 for a in self.values)


def exponents(word: Sequence[int], prm: GlobalParams) -> Exponents:
    """a_k = (r_{i_{k-1}} ... r_{i_1} Lambda_0 | alpha_{i_k}^vee), in the order applied."""
    x = lambda0(prm)
    out = []
    for i in reversed(word):
        a = pair(x, i, prm)
        out.append(a)
        x = x - simple_root(i, prm).scale(a)
    return Exponents(tuple(out))


def parse_word(s: str, prm: GlobalParams | None = None) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    try:
        word = tuple(int(t) for t in s.split(","))
    except ValueError:
        raise ValueError(f"bad Weyl word {s!r}") from None
    if prm is not None and any(i not in prm.I for i in word):
        raise ValueError(f"letters of {s!r} must lie in 0..{prm.ell}")
    return word


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


class NotExtremalError(ValueError):
    pass


def core_from_word(word: Sequence[int], prm: GlobalParams) -> Partition:
    """The core rho with u_rho = f_{i_t}^{(a_t)} ... f_{i_1}^{(a_1)} u_empty."""
    ex = exponents(word, prm)
    if not ex.admissible:
        raise NotExtremalError(f"word {format_word(word)} has a negative exponent {ex.values}")
    v = RFockVector.basis(())
    for i, a in zip(reversed(word), ex.values):
        v = r_apply_f_divided(i, a, v, prm)
    terms = dict(v.terms)
    if len(terms) != 1 or next(iter(terms.values())) != 1:
        raise NotExtremalError(f"word {format_word(word)} does not give a single core: {terms}")
    return next(iter(terms))


def theta_decompose(core: Partition, d: int, prm: GlobalParams) -> tuple[Weight, bool]:
    return root_weight(theta(core, d, prm), prm), is_rock(core, d, prm)
